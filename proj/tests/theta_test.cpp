#include <gtest/gtest.h>

#include "egv/modforms/modforms.hpp"
#include "egv/theta/numeric.hpp"
#include "egv/theta/theta.hpp"

using namespace egv;

namespace {

TablePtr wtable() { return VariableTable::Builder{}.add_even("w").build(); }

// Σ c_e q^{e/8} built from an exponent -> coefficient list.
QSeries scalar_series(const std::map<int, long>& c, int cap8) {
  QSeries s(scalar_table(), 0, cap8);
  for (const auto& [e, v] : c) {
    if (e <= cap8) s.set(e, GradedElement::constant(scalar_table(), 0, v));
  }
  return s;
}

}  // namespace

TEST(EulerPhi, PentagonalNumbers) {
  const int N = 30;
  std::map<int, long> c;
  for (int k = -10; k <= 10; ++k) {
    int e = k * (3 * k - 1) / 2;
    if (e <= N) c[8 * e] += (k % 2 == 0) ? 1 : -1;
  }
  EXPECT_EQ(euler_phi(scalar_table(), 0, N), scalar_series(c, 8 * N));
  QSeries phi3 = euler_phi(scalar_table(), 0, 3);
  EXPECT_EQ(phi3.coeff_whole(0).constant_term(), 1);
  EXPECT_EQ(phi3.coeff_whole(3).constant_term(), 0);
}

TEST(Theta, TripleProductSums) {
  const int N = 12;
  GradedElement zero(scalar_table(), 0);
  std::map<int, long> t3, t2, t1;
  for (int n = -10; n <= 10; ++n) {
    t3[4 * n * n] += 1;  // q^{n²/2}
    t2[4 * n * n] += (n % 2 == 0) ? 1 : -1;
  }
  for (int n = 0; n <= 10; ++n) t1[(2 * n + 1) * (2 * n + 1)] += 2;  // 2q^{(2n+1)²/8}
  EXPECT_EQ(theta_expansion(ThetaKind::kTheta3, zero, N), scalar_series(t3, 8 * N));
  EXPECT_EQ(theta_expansion(ThetaKind::kTheta2, zero, N), scalar_series(t2, 8 * N));
  EXPECT_EQ(theta_expansion(ThetaKind::kTheta1, zero, N), scalar_series(t1, 8 * N));
  EXPECT_TRUE(theta_expansion(ThetaKind::kTheta, zero, N).is_zero());
}

TEST(Theta, HalfPowersCancelInSum) {
  GradedElement zero(scalar_table(), 0);
  QSeries s = theta_expansion(ThetaKind::kTheta2, zero, 4) + theta_expansion(ThetaKind::kTheta3, zero, 4);
  EXPECT_TRUE(s.coeff(4).is_zero());
}

TEST(Theta, JacobiIdentity) {
  const int N = 4;
  auto s = scalar_table();
  GradedElement zero(s, 0);
  QSeries prod = theta_expansion(ThetaKind::kTheta1, zero, N) * theta_expansion(ThetaKind::kTheta2, zero, N) *
                 theta_expansion(ThetaKind::kTheta3, zero, N);
  QSeries tp = theta_prime_zero_normalized(s, 0, N);
  EXPECT_EQ(tp, prod);
  EXPECT_EQ(tp.coeff(1).constant_term(), 2);
  EXPECT_EQ(tp.coeff(9).constant_term(), -6);
}

TEST(Theta, Parity) {
  auto t = wtable();
  auto w = GradedElement::variable(t, 8, "w");
  for (auto k : {ThetaKind::kTheta1, ThetaKind::kTheta2, ThetaKind::kTheta3}) {
    EXPECT_EQ(theta_expansion(k, -w, 3), theta_expansion(k, w, 3));
  }
  EXPECT_EQ(theta_expansion(ThetaKind::kTheta, -w, 3), -theta_expansion(ThetaKind::kTheta, w, 3));
}

TEST(Theta, WittenFactorRecoversDerivative) {
  auto t = wtable();
  const int D = 10, N = 3;
  auto w = GradedElement::variable(t, D, "w");
  QSeries lhs = witten_factor(w, N) * theta_expansion(ThetaKind::kTheta, w, N);
  QSeries rhs = theta_prime_zero_normalized(t, D, N) * w;
  EXPECT_EQ(lhs, rhs);
}

TEST(Theta, WittenAndTwistLowOrder) {
  auto t = wtable();
  auto w = GradedElement::variable(t, 8, "w");
  GradedElement zero(t, 8);
  EXPECT_EQ(witten_factor(zero, 3), QSeries::constant(t, 8, 24, 2));
  EXPECT_EQ(witten_factor(w, 3).coeff_whole(0), half_sinh_quotient(w) * Rational(2));
  for (int a = 1; a <= 3; ++a) EXPECT_EQ(twist_factor(a, zero, 3), QSeries::constant(t, 8, 24, 1));
  EXPECT_EQ(twist_factor(1, w, 3).coeff_whole(0), half_cosh(w));
}

TEST(ThetaNumeric, LawsAtSamplePoints) {
  const cplx pts[3][2] = {{{0.25, 1.3}, {0.31, 0.04}}, {{-0.4, 1.1}, {0.12, -0.2}}, {{0.1, 1.7}, {-0.27, 0.15}}};
  for (const auto& p : pts) {
    LawReport r = numeric_transformation_check(p[0], p[1], 40, 1e-9);
    EXPECT_TRUE(r.passed) << "tau=" << p[0];
    EXPECT_LT(r.max_deviation, 1e-9);
    EXPECT_GE(r.laws.size(), 12u);
  }
}

TEST(ThetaNumeric, PoorConvergenceIsDiagnosed) {
  LawReport r = numeric_transformation_check({0.1, 0.05}, {0.2, 0.0}, 3, 1e-12);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.diagnostics.empty());
}
