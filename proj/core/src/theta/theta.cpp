#include "egv/theta/theta.hpp"

#include "egv/errors.hpp"

namespace egv {

std::string_view to_string(ThetaKind k) {
  switch (k) {
    case ThetaKind::kTheta: return "theta";
    case ThetaKind::kTheta1: return "theta1";
    case ThetaKind::kTheta2: return "theta2";
    case ThetaKind::kTheta3: return "theta3";
  }
  return "?";
}

namespace {

constexpr int D8 = QSeries::kDenom;

// s·(1 + c·q^{e/8})
QSeries times_binomial(const QSeries& s, const GradedElement& c, int exp8) {
  if (exp8 > s.order_cap()) return s;
  return s + (s * c).shifted(exp8).with_order_cap(s.order_cap());
}

GradedElement one(const GradedElement& w) {
  return GradedElement::constant(w.table(), w.degree_cap(), 1);
}

void require_degree_two(const GradedElement& w) {
  for (const auto& t : w.terms()) {
    if (t.degree != 2) throw UsageError("theta argument must be homogeneous of degree 2");
  }
}

// ∏_{j≤N}(1 − q^j)·(1 + s·E(w)q^{j−h})(1 + s·E(−w)q^{j−h}) with h = 0 or 1/2.
QSeries core_product(const GradedElement& w, int N, int sign, bool half) {
  const int cap = N * D8;
  GradedElement ep = exp_nilpotent(w) * Rational(sign);
  GradedElement em = exp_nilpotent(-w) * Rational(sign);
  GradedElement m1 = one(w) * Rational(-1);
  QSeries s = QSeries::constant(one(w), cap);
  for (int j = 1; j <= N; ++j) {
    int e = half ? j * D8 - D8 / 2 : j * D8;
    s = times_binomial(s, m1, j * D8);
    s = times_binomial(s, ep, e);
    s = times_binomial(s, em, e);
  }
  return s;
}

QSeries core_for(ThetaKind kind, const GradedElement& w, int N) {
  switch (kind) {
    case ThetaKind::kTheta: return core_product(w, N, -1, false);
    case ThetaKind::kTheta1: return core_product(w, N, +1, false);
    case ThetaKind::kTheta2: return core_product(w, N, -1, true);
    case ThetaKind::kTheta3: return core_product(w, N, +1, true);
  }
  throw UsageError("unknown theta kind");
}

}  // namespace

GradedElement half_sinh_quotient(const GradedElement& w) {
  GradedElement w2 = w * w;
  std::size_t len = w2.is_zero() ? 1 : static_cast<std::size_t>(w.degree_cap() / 4) + 1;
  std::vector<Rational> c(len);
  for (std::size_t m = 0; m < len; ++m) {
    Integer four_m;
    mpz_ui_pow_ui(four_m.get_mpz_t(), 4, m);
    c[m] = Rational(1) / (Rational(four_m) * factorial(static_cast<unsigned>(2 * m + 1)));
  }
  return inv_unit(apply_series(c, w2));
}

GradedElement half_cosh(const GradedElement& w) {
  GradedElement half = w * make_rational(1, 2);
  return (exp_nilpotent(half) + exp_nilpotent(-half)) * make_rational(1, 2);
}

QSeries euler_phi(TablePtr table, int degree_cap, int N) {
  if (N < 0) throw UsageError("euler_phi: N must be nonnegative");
  GradedElement m1 = GradedElement::constant(table, degree_cap, -1);
  QSeries s = QSeries::constant(table, degree_cap, N * D8, 1);
  for (int j = 1; j <= N; ++j) s = times_binomial(s, m1, j * D8);
  return s;
}

QSeries theta_expansion(ThetaKind kind, const GradedElement& w, int N) {
  if (N < 0) throw UsageError("theta_expansion: N must be nonnegative");
  require_degree_two(w);
  QSeries core = core_for(kind, w, N);
  if (kind == ThetaKind::kTheta2 || kind == ThetaKind::kTheta3) return core;
  GradedElement half = w * make_rational(1, 2);
  GradedElement pre = kind == ThetaKind::kTheta ? exp_nilpotent(half) - exp_nilpotent(-half)
                                                : exp_nilpotent(half) + exp_nilpotent(-half);
  return (core * pre).shifted(1).with_order_cap(N * D8);
}

QSeries theta_prime_zero_normalized(TablePtr table, int degree_cap, int N) {
  QSeries phi = euler_phi(table, degree_cap, N);
  return (phi * phi * phi * Rational(2)).shifted(1).with_order_cap(N * D8);
}

QSeries witten_factor(const GradedElement& w, int N) {
  require_degree_two(w);
  QSeries phi = euler_phi(w.table(), w.degree_cap(), N);
  // ∏(1 − E(w)q^j)(1 − E(−w)q^j) is the theta core without its φ factor.
  QSeries denom = core_product(w, N, -1, false) * series_inv(phi);
  return phi * phi * series_inv(denom) * (half_sinh_quotient(w) * Rational(2));
}

QSeries twist_factor(int a, const GradedElement& w, int N) {
  require_degree_two(w);
  ThetaKind kind;
  switch (a) {
    case 1: kind = ThetaKind::kTheta1; break;
    case 2: kind = ThetaKind::kTheta2; break;
    case 3: kind = ThetaKind::kTheta3; break;
    default: throw UsageError("twist_factor: a must be 1, 2 or 3");
  }
  GradedElement zero(w.table(), w.degree_cap());
  QSeries q = core_for(kind, w, N) * series_inv(core_for(kind, zero, N));
  if (a == 1) q = q * half_cosh(w);
  return q;
}

}  // namespace egv
