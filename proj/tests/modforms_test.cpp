#include <gtest/gtest.h>

#include "egv/errors.hpp"
#include "egv/modforms/modforms.hpp"

using namespace egv;

namespace {

void expect_coeffs(const QSeries& s, const std::vector<long>& c) {
  for (std::size_t n = 0; n < c.size(); ++n) {
    EXPECT_EQ(s.coeff_whole(static_cast<int>(n)).constant_term(), c[n]) << "q^" << n;
  }
}

QSeries E(int k, int N = 4) { return eisenstein(k, N); }

}  // namespace

TEST(Eisenstein, GoldenValues) {
  expect_coeffs(E(2), {1, -24, -72});
  expect_coeffs(E(4), {1, 240, 2160, 6720});
  expect_coeffs(E(6), {1, -504, -16632, -122976});
}

TEST(Eisenstein, ProductsUsedByTheIdentities) {
  expect_coeffs(E(4) * E(4), {1, 480, 61920});
  expect_coeffs(E(4) * E(6), {1, -264, -135432});
  expect_coeffs(E(4) * E(4) * E(4), {1, 720, 179280});
  expect_coeffs(E(6) * E(6), {1, -1008, 220752});
  expect_coeffs(E(4) * E(4) * E(6), {1, -24, -196632});
  expect_coeffs(E(4) * E(4) * E(4) * E(4), {1, 960, 354240});
  expect_coeffs(E(4) * E(6) * E(6), {1, -768, -19008});
}

TEST(Eisenstein, DivisorSumOracle) {
  const int N = 40;
  QSeries e4 = eisenstein(4, N);
  QSeries e6 = eisenstein(6, N);
  for (int n = 1; n <= N; ++n) {
    long s3 = 0, s5 = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) {
        s3 += d * d * d;
        s5 += d * d * d * d * d;
      }
    }
    EXPECT_EQ(e4.coeff_whole(n).constant_term(), 240 * s3);
    EXPECT_EQ(e6.coeff_whole(n).constant_term(), -504 * s5);
    EXPECT_EQ(divisor_sigma(3, static_cast<unsigned>(n)), s3);
  }
}

TEST(Eisenstein, RejectsOtherWeights) { EXPECT_THROW(eisenstein(8, 3), UsageError); }

TEST(Basis, Shapes) {
  EXPECT_EQ(basis(8, 3).dim(), 1u);
  EXPECT_EQ(basis(10, 3).dim(), 1u);
  EXPECT_EQ(basis(14, 3).dim(), 1u);
  auto b12 = basis(12, 3);
  ASSERT_EQ(b12.dim(), 2u);
  EXPECT_EQ(b12.monomials[0], std::make_pair(3, 0));
  EXPECT_EQ(b12.series[0].coeff_whole(1).constant_term(), 720);
  EXPECT_EQ(b12.series[1].coeff_whole(1).constant_term(), -1008);
  auto b16 = basis(16, 3);
  ASSERT_EQ(b16.dim(), 2u);
  EXPECT_EQ(b16.series[0].coeff_whole(1).constant_term(), 960);
  EXPECT_EQ(b16.series[1].coeff_whole(1).constant_term(), -768);
  for (int k = 4; k <= 40; k += 2) EXPECT_EQ(static_cast<int>(basis(k, 8).dim()), modular_dimension(k)) << k;
  EXPECT_THROW(basis(7, 3), UsageError);
  EXPECT_THROW(basis(2, 3), UsageError);
}

TEST(Decompose, ProportionalCases) {
  auto d = decompose(E(4) * E(4), 8, 4);
  EXPECT_TRUE(d.residual_zero);
  EXPECT_EQ(d.lambdas[0].constant_term(), 1);
  auto d3 = decompose(E(4) * E(6) * Rational(3), 10, 4);
  EXPECT_TRUE(d3.residual_zero);
  EXPECT_EQ(d3.lambdas[0].constant_term(), 3);
}

TEST(Decompose, TwoDimensional) {
  auto d = decompose(E(4) * E(4) * E(4) - E(6) * E(6), 12, 4);
  EXPECT_TRUE(d.residual_zero);
  EXPECT_EQ(d.lambdas[0].constant_term(), 1);
  EXPECT_EQ(d.lambdas[1].constant_term(), -1);
}

TEST(Decompose, FormValuedLambdas) {
  auto t = VariableTable::Builder{}.add_even("x").add_odd("g7", 7).build();
  auto x = GradedElement::variable(t, 11, "x");
  auto g = GradedElement::variable(t, 11, "g7");
  QSeries F = eisenstein(4, 4, t, 11) * eisenstein(6, 4, t, 11) * (x * x * g + g * Rational(5));
  auto d = decompose(F, 10, 4);
  EXPECT_TRUE(d.residual_zero);
  EXPECT_EQ(d.lambdas[0], x * x * g + g * Rational(5));
}

TEST(Decompose, ReportsFirstFailure) {
  auto d = decompose(E(4) * E(4), 10, 4);
  EXPECT_FALSE(d.residual_zero);
  ASSERT_TRUE(d.first_failing_order);
  EXPECT_EQ(*d.first_failing_order, 1);
}

TEST(Decompose, RejectsHalfIntegerPowers) {
  auto s = scalar_table();
  QSeries f = QSeries::constant(s, 0, 32, 1) + QSeries::monomial(GradedElement::constant(s, 0, 1), 4, 32);
  EXPECT_THROW(decompose(f, 8, 4), UsageError);
  EXPECT_THROW(decompose(E(4, 2), 8, 4), UsageError);
}

TEST(InferWeight, PicksTheRightWeight) {
  auto r = infer_weight(E(4) * E(4), {8, 10}, 4);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], std::make_pair(8, true));
  EXPECT_EQ(r[1], std::make_pair(10, false));
  auto r2 = infer_weight(E(4) * E(6), {10}, 4);
  EXPECT_EQ(r2[0], std::make_pair(10, true));
}
