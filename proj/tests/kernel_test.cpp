#include <gtest/gtest.h>

#include "egv/errors.hpp"
#include "egv/kernel/qseries.hpp"
#include "egv/modforms/modforms.hpp"

using namespace egv;

namespace {

TablePtr wtable() { return VariableTable::Builder{}.add_even("w").add_odd("g3", 3).add_odd("g7", 7).build(); }

GradedElement W(const TablePtr& t, int cap) { return GradedElement::variable(t, cap, "w"); }
GradedElement one(const TablePtr& t, int cap) { return GradedElement::constant(t, cap, 1); }

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational r = make_rational(6, -4);
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(make_rational(1, 3) + make_rational(1, 6), make_rational(1, 2));
  EXPECT_EQ(factorial(6), 720);
}

TEST(VariableTable, Validation) {
  EXPECT_THROW(VariableTable::Builder{}.add_even("a", 3).build(), UsageError);
  EXPECT_THROW(VariableTable::Builder{}.add_odd("a", 2).build(), UsageError);
  EXPECT_THROW(VariableTable::Builder{}.add_even("a").add_even("a").build(), UsageError);
  EXPECT_THROW(VariableTable::Builder{}.add_even("a", 0).build(), UsageError);
  VariableTable::Builder big;
  for (int i = 0; i < 49; ++i) big.add_even("v" + std::to_string(i));
  EXPECT_THROW(big.build(), UsageError);
  auto t = wtable();
  EXPECT_EQ(t->index("g3"), 1u);
  EXPECT_FALSE(t->find("zz"));
  EXPECT_THROW(t->index("zz"), UsageError);
}

TEST(Graded, DifferenceOfSquares) {
  auto t = wtable();
  auto w = W(t, 4);
  EXPECT_EQ((one(t, 4) + w) * (one(t, 4) - w), one(t, 4) - w * w);
}

TEST(Graded, TruncationDropsHighDegrees) {
  auto t = wtable();
  auto w = W(t, 6);
  EXPECT_TRUE((w * w * w * w).is_zero());
  EXPECT_FALSE((w * w * w).is_zero());
}

TEST(Graded, OddClassesSquareToZero) {
  auto t = wtable();
  auto g3 = GradedElement::variable(t, 12, "g3");
  auto g7 = GradedElement::variable(t, 12, "g7");
  EXPECT_TRUE((g3 * g3).is_zero());
  EXPECT_TRUE((g3 * g7).is_zero());
  EXPECT_FALSE((g3 * W(t, 12)).is_zero());
}

TEST(Graded, DegreePart) {
  auto t = wtable();
  auto w = W(t, 8);
  auto x = one(t, 8) + w + w * w;
  EXPECT_EQ(degree_part(x, 0), one(t, 8));
  EXPECT_EQ(degree_part(exp_nilpotent(w), 4), w * w * make_rational(1, 2));
  auto g3w = GradedElement::variable(t, 8, "g3") * w;
  EXPECT_EQ(degree_part(g3w, 5), g3w);
}

TEST(Graded, MismatchedCapsRejected) {
  auto t = wtable();
  EXPECT_THROW(W(t, 4) * W(t, 6), UsageError);
  auto t2 = VariableTable::Builder{}.add_even("u").build();
  EXPECT_THROW(W(t, 4) + GradedElement::variable(t2, 4, "u"), UsageError);
}

TEST(Graded, UnitInverseAndLog) {
  auto t = wtable();
  auto w = W(t, 10);
  auto a = one(t, 10) * Rational(3) + w - w * w * make_rational(1, 7);
  EXPECT_EQ(a * inv_unit(a), one(t, 10));
  auto b = exp_nilpotent(w * Rational(2));
  EXPECT_EQ(log_unit(b), w * Rational(2));
  EXPECT_THROW(inv_unit(w), SingularityError);
}

TEST(Graded, EvalNeedsEveryVariable) {
  auto t = wtable();
  auto w = W(t, 4);
  EXPECT_DOUBLE_EQ((w * w).eval({{"w", 2.0}}).real(), 4.0);
  EXPECT_THROW((w * w).eval({}), UsageError);
}

TEST(QSeries, ProductAndPuiseux) {
  auto s = scalar_table();
  QSeries a = QSeries::constant(s, 0, 16, 1) + QSeries::monomial(GradedElement::constant(s, 0, 1), 8, 16);
  QSeries b = QSeries::constant(s, 0, 16, 1) - QSeries::monomial(GradedElement::constant(s, 0, 1), 8, 16);
  QSeries expect = QSeries::constant(s, 0, 16, 1) - QSeries::monomial(GradedElement::constant(s, 0, 1), 16, 16);
  EXPECT_EQ(a * b, expect);

  QSeries q18 = QSeries::monomial(GradedElement::constant(s, 0, 1), 1, 40);
  QSeries q78 = QSeries::monomial(GradedElement::constant(s, 0, 1), 7, 40);
  QSeries prod = q18 * q78;
  EXPECT_EQ(prod.coeff(8).constant_term(), 1);
  EXPECT_FALSE(prod.has_fractional_exponents());
}

TEST(QSeries, GeometricInverse) {
  auto s = scalar_table();
  QSeries f = QSeries::constant(s, 0, 24, 1) - QSeries::monomial(GradedElement::constant(s, 0, 1), 8, 24);
  QSeries g = series_inv(f);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(g.coeff_whole(n).constant_term(), 1);
}

TEST(QSeries, InverseOfTwistedFactor) {
  auto t = wtable();
  auto w = W(t, 6);
  QSeries f = QSeries::constant(t, 6, 24, 1) - QSeries::monomial(exp_nilpotent(w), 8, 24);
  EXPECT_EQ(series_inv(f).coeff_whole(1), exp_nilpotent(w));
}

TEST(QSeries, InverseRejectsNonUnit) {
  auto t = wtable();
  QSeries f = QSeries::monomial(W(t, 4), 0, 16);
  EXPECT_THROW(series_inv(f), SingularityError);
}

TEST(QSeries, EisensteinInverse) {
  QSeries e4 = eisenstein(4, 6);
  EXPECT_EQ(e4 * series_inv(e4), QSeries::constant(scalar_table(), 0, 48, 1));
}

TEST(QSeries, ExpOfE2Factor) {
  // exp((1/24)E2·c/30) with a formal degree-4 class c
  auto t = VariableTable::Builder{}.add_even("c", 4).build();
  auto c = GradedElement::variable(t, 12, "c");
  QSeries f = series_exp(eisenstein(2, 3, t, 12) * (c * make_rational(1, 720)));
  GradedElement e0 = exp_nilpotent(c * make_rational(1, 720));
  GradedElement c30 = c * make_rational(1, 30);
  EXPECT_EQ(f.coeff_whole(0), e0);
  EXPECT_EQ(f.coeff_whole(1), -(e0 * c30));
  GradedElement six = GradedElement::constant(t, 12, 6);
  EXPECT_EQ(f.coeff_whole(2), e0 * (c30 - six) * c30 * make_rational(1, 2));
}

TEST(QSeries, ExpOfZeroAndRejection) {
  auto s = scalar_table();
  QSeries z(s, 0, 24);
  EXPECT_EQ(series_exp(z), QSeries::constant(s, 0, 24, 1));
  EXPECT_THROW(series_exp(QSeries::constant(s, 0, 24, 1)), UsageError);
}

TEST(QSeries, LogInvertsExp) {
  auto t = wtable();
  auto w = W(t, 8);
  QSeries f = QSeries::monomial(w, 0, 24) + QSeries::monomial(w * w + one(t, 8), 8, 24);
  EXPECT_EQ(series_log(series_exp(f)), f);
}

TEST(QSeries, CoefficientBeyondCapThrows) {
  QSeries e = eisenstein(4, 2);
  EXPECT_THROW(e.coeff_whole(3), UsageError);
}

TEST(QSeries, NumericEvaluation) {
  auto s = scalar_table();
  QSeries f = QSeries::constant(s, 0, 8, 1) - QSeries::monomial(GradedElement::constant(s, 0, 1), 8, 8);
  EXPECT_NEAR(eval_numeric(f, {}, 0.1).real(), 0.9, 1e-15);
  QSeries e4 = eisenstein(4, 40);
  // the q^5 term is 30240e-15, below the tolerance
  double partial = 1 + 240 * 1e-3 + 2160 * 1e-6 + 6720 * 1e-9 + 17520 * 1e-12;
  EXPECT_NEAR(eval_numeric(e4, {}, 0.001).real(), partial, 1e-9);
}
