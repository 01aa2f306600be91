#include "egv/theta/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "egv/errors.hpp"

namespace egv {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx I{0.0, 1.0};

struct Product {
  cplx value;
  cplx logderiv;  // d/dv log(product)
};

// ∏_{j≤terms}(1 − q^j)(1 + s·z q^{j−h})(1 + s·z⁻¹ q^{j−h})
Product theta_core(cplx v, cplx tau, int terms, double sign, bool half) {
  cplx z = std::exp(2.0 * kPi * I * v);
  cplx zi = 1.0 / z;
  cplx value = 1.0;
  cplx ld = 0.0;
  for (int j = 1; j <= terms; ++j) {
    double e = half ? j - 0.5 : j;
    cplx qj = std::exp(2.0 * kPi * I * tau * static_cast<double>(j));
    cplx qe = std::exp(2.0 * kPi * I * tau * e);
    cplx a = 1.0 + sign * z * qe;
    cplx b = 1.0 + sign * zi * qe;
    value *= (1.0 - qj) * a * b;
    ld += 2.0 * kPi * I * sign * (z * qe / a - zi * qe / b);
  }
  return {value, ld};
}

bool is_half(ThetaKind k) { return k == ThetaKind::kTheta2 || k == ThetaKind::kTheta3; }
double sign_of(ThetaKind k) {
  return (k == ThetaKind::kTheta || k == ThetaKind::kTheta2) ? -1.0 : 1.0;
}

void check_tau(cplx tau) {
  if (!(tau.imag() > 0)) throw UsageError("tau must lie in the upper half plane");
}

}  // namespace

cplx theta_numeric(ThetaKind kind, cplx v, cplx tau, int terms) {
  check_tau(tau);
  Product p = theta_core(v, tau, terms, sign_of(kind), is_half(kind));
  if (is_half(kind)) return p.value;
  cplx q8 = std::exp(kPi * I * tau / 4.0);
  cplx trig = kind == ThetaKind::kTheta ? std::sin(kPi * v) : std::cos(kPi * v);
  return 2.0 * q8 * trig * p.value;
}

cplx theta_prime_numeric(ThetaKind kind, cplx v, cplx tau, int terms) {
  check_tau(tau);
  Product p = theta_core(v, tau, terms, sign_of(kind), is_half(kind));
  if (is_half(kind)) return p.value * p.logderiv;
  cplx q8 = std::exp(kPi * I * tau / 4.0);
  cplx s = std::sin(kPi * v);
  cplx c = std::cos(kPi * v);
  if (kind == ThetaKind::kTheta) return 2.0 * q8 * (kPi * c * p.value + s * p.value * p.logderiv);
  return 2.0 * q8 * (-kPi * s * p.value + c * p.value * p.logderiv);
}

cplx e2_numeric(cplx tau, int terms) {
  check_tau(tau);
  cplx sum = 0.0;
  for (int n = 1; n <= terms; ++n) {
    cplx qn = std::exp(2.0 * kPi * I * tau * static_cast<double>(n));
    sum += static_cast<double>(n) * qn / (1.0 - qn);
  }
  return 1.0 - 24.0 * sum;
}

LawReport numeric_transformation_check(cplx tau, cplx v, int terms, double tol) {
  check_tau(tau);
  if (terms < 1) throw UsageError("terms must be positive");
  if (!(tol > 0)) throw UsageError("tol must be positive");

  LawReport rep;
  rep.tau = tau;
  rep.v = v;
  rep.terms = terms;
  rep.tol = tol;

  const cplx tau_t = tau + 1.0;
  const cplx tau_s = -1.0 / tau;
  const cplx tau_g = (2.0 * tau + 1.0) / (tau + 1.0);
  const cplx tv = tau * v;

  // Tail of a product ∏(1 + x_j) with |x_j| ≤ Z r^{j−1/2}: about 3Z r^{T+1/2}/(1−r).
  // Lambert tail: Σ_{n>T} n rⁿ/(1−rⁿ) ≤ (T+1) r^{T+1}/(1−r)².
  for (cplx t : {tau, tau_t, tau_s, tau_g}) {
    double r = std::exp(-2.0 * kPi * t.imag());
    for (cplx arg : {v, tv}) {
      double zmax = std::exp(2.0 * kPi * std::abs(arg.imag()));
      double tail = 3.0 * zmax * std::pow(r, terms + 0.5) / (1.0 - r);
      rep.tail_estimate = std::max(rep.tail_estimate, tail);
    }
    double lt = 24.0 * (terms + 1) * std::pow(r, terms + 1) / ((1.0 - r) * (1.0 - r));
    rep.tail_estimate = std::max(rep.tail_estimate, lt);
  }
  if (rep.tail_estimate > tol / 10) {
    rep.diagnostics.push_back("truncation tail estimate " + std::to_string(rep.tail_estimate) +
                              " exceeds tol/10; increase terms or Im(tau)");
  }

  auto add = [&](std::string name, cplx lhs, cplx rhs) {
    LawResult r;
    r.name = std::move(name);
    r.deviation = std::abs(lhs - rhs);
    if (!std::isfinite(r.deviation)) {
      rep.diagnostics.push_back(r.name + ": non-finite value");
      r.deviation = INFINITY;
    }
    r.passed = r.deviation < tol;
    rep.laws.push_back(r);
  };

  using K = ThetaKind;
  const cplx e8 = std::exp(kPi * I / 4.0);
  const cplx A = std::sqrt(tau / I);
  const cplx B = std::exp(kPi * I * tau * v * v);
  const cplx jac = 2.0 * kPi * I * tau * v;
  auto th = [&](K k, cplx a, cplx t) { return theta_numeric(k, a, t, terms); };
  auto thp = [&](K k, cplx a, cplx t) { return theta_prime_numeric(k, a, t, terms); };

  add("theta T", th(K::kTheta, v, tau_t), e8 * th(K::kTheta, v, tau));
  add("theta1 T", th(K::kTheta1, v, tau_t), e8 * th(K::kTheta1, v, tau));
  add("theta2 T", th(K::kTheta2, v, tau_t), th(K::kTheta3, v, tau));
  add("theta3 T", th(K::kTheta3, v, tau_t), th(K::kTheta2, v, tau));

  add("theta S", th(K::kTheta, v, tau_s), A * B * th(K::kTheta, tv, tau) / I);
  add("theta1 S", th(K::kTheta1, v, tau_s), A * B * th(K::kTheta2, tv, tau));
  add("theta2 S", th(K::kTheta2, v, tau_s), A * B * th(K::kTheta1, tv, tau));
  add("theta3 S", th(K::kTheta3, v, tau_s), A * B * th(K::kTheta3, tv, tau));

  add("theta' T", thp(K::kTheta, v, tau_t), e8 * thp(K::kTheta, v, tau));
  add("theta1' T", thp(K::kTheta1, v, tau_t), e8 * thp(K::kTheta1, v, tau));
  add("theta2' T", thp(K::kTheta2, v, tau_t), thp(K::kTheta3, v, tau));
  add("theta3' T", thp(K::kTheta3, v, tau_t), thp(K::kTheta2, v, tau));

  add("theta' S", thp(K::kTheta, v, tau_s),
      A * B * (jac * th(K::kTheta, tv, tau) + tau * thp(K::kTheta, tv, tau)) / I);
  add("theta1' S", thp(K::kTheta1, v, tau_s),
      A * B * (jac * th(K::kTheta2, tv, tau) + tau * thp(K::kTheta2, tv, tau)));
  add("theta2' S", thp(K::kTheta2, v, tau_s),
      A * B * (jac * th(K::kTheta1, tv, tau) + tau * thp(K::kTheta1, tv, tau)));
  add("theta3' S", thp(K::kTheta3, v, tau_s),
      A * B * (jac * th(K::kTheta3, tv, tau) + tau * thp(K::kTheta3, tv, tau)));

  add("theta'(0) S", thp(K::kTheta, 0.0, tau_s), A * tau * thp(K::kTheta, 0.0, tau) / I);
  add("jacobi identity", thp(K::kTheta, 0.0, tau),
      kPi * th(K::kTheta1, 0.0, tau) * th(K::kTheta2, 0.0, tau) * th(K::kTheta3, 0.0, tau));

  const cplx e2 = e2_numeric(tau, terms);
  add("E2 T", e2_numeric(tau_t, terms), e2);
  add("E2 S", e2_numeric(tau_s, terms), tau * tau * e2 - 6.0 * I * tau / kPi);
  // g = (2 1; 1 1): c = 1, cτ + d = τ + 1.
  add("E2 SL2", e2_numeric(tau_g, terms), (tau + 1.0) * (tau + 1.0) * e2 - 6.0 * I * (tau + 1.0) / kPi);

  rep.passed = rep.diagnostics.empty();
  for (const auto& l : rep.laws) {
    rep.max_deviation = std::max(rep.max_deviation, l.deviation);
    if (!l.passed) rep.passed = false;
  }
  return rep;
}

}  // namespace egv
