#include "egv/bundles/bundles.hpp"
#include "egv/errors.hpp"

namespace egv {

namespace {

constexpr int D8 = QSeries::kDenom;

// s·(1 + c·q^{t/8})^m, using the geometric series for negative m.
QSeries times_binomial_power(QSeries s, const GradedElement& c, int t8, int m) {
  const int cap = s.order_cap();
  if (m == 0 || t8 > cap || c.is_zero()) return s;
  if (m > 0) {
    for (int i = 0; i < m; ++i) s = s + (s * c).shifted(t8).with_order_cap(cap);
    return s;
  }
  // 1/(1 + c q^t) = Σ (−c)^k q^{kt}
  QSeries geom = QSeries::constant(GradedElement::constant(c.table(), c.degree_cap(), 1), cap);
  GradedElement p = GradedElement::constant(c.table(), c.degree_cap(), 1);
  GradedElement negc = -c;
  for (int k = 1; k * t8 <= cap; ++k) {
    p = p * negc;
    geom.set(k * t8, p);
  }
  QSeries g = series_pow(geom, static_cast<unsigned>(-m));
  return s * g;
}

RootBundle require(const std::optional<RootBundle>& b, const char* what) {
  if (!b) throw UsageError(std::string("bundle_series: missing input ") + what);
  return *b;
}

}  // namespace

QSeries power_series(PowerOp op, const RootBundle& b, int t_exp8, int sign, int N) {
  if (t_exp8 <= 0) throw UsageError("power_series: exponent of q must be positive");
  if (sign != 1 && sign != -1) throw UsageError("power_series: sign must be ±1");
  if (N < 0) throw UsageError("power_series: N must be nonnegative");
  const int cap = N * D8;
  QSeries s = QSeries::constant(b.table(), b.degree_cap(), cap, 1);
  // Λ: ∏(1 + sign·q^t e^w)^m;  S: ∏(1 − q^t e^w)^{−m}
  const int csign = op == PowerOp::kLambda ? sign : -1;
  auto exponent = [op](int m) { return op == PowerOp::kLambda ? m : -m; };
  for (const auto& r : b.roots()) {
    GradedElement c = exp_nilpotent(r.root) * Rational(csign);
    s = times_binomial_power(s, c, t_exp8, exponent(r.multiplicity));
  }
  if (b.rank_offset() != 0) {
    GradedElement c = GradedElement::constant(b.table(), b.degree_cap(), csign);
    s = times_binomial_power(s, c, t_exp8, exponent(b.rank_offset()));
  }
  return s;
}

QSeries bundle_series(const BundleSeriesDescriptor& d, int N) {
  auto sym_part = [N](const RootBundle& tm) {
    RootBundle t = tm.tilde();
    QSeries s = QSeries::constant(t.table(), t.degree_cap(), N * D8, 1);
    for (int n = 1; n <= N; ++n) s = s * power_series(PowerOp::kSym, t, n * D8, 1, N);
    return s;
  };
  // ∏_{m≤N} Λ_{sign·q^{m−h}}(b)
  auto lambda_part = [N](const RootBundle& b, int sign, bool half) {
    QSeries s = QSeries::constant(b.table(), b.degree_cap(), N * D8, 1);
    for (int m = 1; m <= N; ++m) {
      int e = half ? m * D8 - D8 / 2 : m * D8;
      s = s * power_series(PowerOp::kLambda, b, e, sign, N);
    }
    return s;
  };

  switch (d.kind) {
    case BundleSeriesKind::kTheta1: {
      RootBundle tm = require(d.tm, "tm");
      return sym_part(tm) * lambda_part(tm.tilde(), +1, false);
    }
    case BundleSeriesKind::kTheta2: {
      RootBundle tm = require(d.tm, "tm");
      return sym_part(tm) * lambda_part(tm.tilde(), -1, true);
    }
    case BundleSeriesKind::kTheta3: {
      RootBundle tm = require(d.tm, "tm");
      return sym_part(tm) * lambda_part(tm.tilde(), +1, true);
    }
    case BundleSeriesKind::kWitten:
      return sym_part(require(d.tm, "tm"));
    case BundleSeriesKind::kQE: {
      RootBundle e = require(d.e, "e");
      RootBundle et = e.tilde();
      QSeries s = lambda_part(et, +1, false) * lambda_part(et, -1, true) * lambda_part(et, +1, true);
      return s * spinor_ch(e);
    }
    case BundleSeriesKind::kThetaSpinC: {
      RootBundle tm = require(d.tm, "tm");
      RootBundle lt = require(d.l, "l").tilde();
      return sym_part(tm) * lambda_part(lt, +1, false) * lambda_part(lt, -1, true) *
             lambda_part(lt, +1, true);
    }
    case BundleSeriesKind::kThetaSpinCStar: {
      RootBundle tm = require(d.tm, "tm");
      RootBundle lt = require(d.l, "l").tilde();
      return sym_part(tm) * lambda_part(lt, -1, false);
    }
  }
  throw UsageError("bundle_series: unknown kind");
}

}  // namespace egv
