#include <gtest/gtest.h>

#include "egv/e8/e8.hpp"
#include "egv/modforms/modforms.hpp"

using namespace egv;

namespace {

TablePtr ytable(bool pair) {
  VariableTable::Builder b;
  for (int i = 1; i <= 8; ++i) b.add_even("y" + std::to_string(i));
  if (pair) {
    for (int i = 1; i <= 8; ++i) b.add_even("z" + std::to_string(i));
  }
  return b.build();
}

}  // namespace

TEST(E8Roots, Shape) {
  E8RootSystem rs = e8_roots();
  ASSERT_EQ(rs.roots.size(), 240u);
  int integral = 0;
  for (const auto& r : rs.roots) {
    Rational n2 = 0;
    int nonzero = 0, minus = 0;
    for (const auto& x : r) {
      n2 += x * x;
      nonzero += x != 0;
      minus += x < 0;
    }
    EXPECT_EQ(n2, 2);
    if (nonzero == 2) {
      ++integral;
    } else {
      EXPECT_EQ(nonzero, 8);
      EXPECT_EQ(minus % 2, 0);
    }
  }
  EXPECT_EQ(integral, 112);
  auto g = e8_gram_sum(rs);
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) EXPECT_EQ(g[a][b], a == b ? 60 : 0);
  }
}

TEST(E8Adjoint, LowDegrees) {
  auto t = ytable(false);
  auto w = e8_forms(t, 12, "y", 8);
  GradedElement chW = ch_adjoint(w);
  EXPECT_EQ(chW.constant_term(), 248);
  EXPECT_TRUE(degree_part(chW, 2).is_zero());
  GradedElement s(t, 12);
  for (const auto& x : w) s += x * x;
  EXPECT_EQ(degree_part(chW, 4), s * Rational(30));
  for (const auto& term : chW.terms()) EXPECT_EQ(term.degree % 4, 0);
  TablePtr sc = scalar_table();
  EXPECT_EQ(ch_adjoint(std::vector<GradedElement>(8, GradedElement(sc, 0))).constant_term(), 248);
}

TEST(E8Adjoint, CharacterData) {
  auto t = ytable(false);
  auto d = e8_character_data(e8_forms(t, 8, "y", 8), 2);
  EXPECT_EQ(d.c2W, -degree_part(d.chW, 4));
  EXPECT_EQ(d.chWbar.constant_term(), 4124);
  EXPECT_TRUE(degree_part(d.chWbar, 2).is_zero());
}

TEST(ThetaV, ZeroIsE4) {
  TablePtr sc = scalar_table();
  QSeries tv = theta_V(std::vector<GradedElement>(8, GradedElement(sc, 0)), 4);
  EXPECT_EQ(tv, eisenstein(4, 4));
  EXPECT_EQ(tv.coeff_whole(2).constant_term(), 20 - 8 * 248 + 4124);
  std::vector<GradedElement> z(8, GradedElement(sc, 0));
  EXPECT_EQ(theta_V_pair(z, z, 2), eisenstein(4, 2) * eisenstein(4, 2));
}

TEST(ThetaV, FirstCoefficientIsAdjoint) {
  auto t = ytable(false);
  auto w = e8_forms(t, 8, "y", 8);
  QSeries tv = theta_V(w, 1);
  EXPECT_FALSE(tv.has_fractional_exponents());
  EXPECT_EQ(tv.coeff_whole(1), ch_adjoint(w) - GradedElement::constant(t, 8, 8));
}

TEST(ThetaV, PairCoefficients) {
  auto t = ytable(true);
  const int D = 4;
  auto wy = e8_forms(t, D, "y", 8);
  auto wz = e8_forms(t, D, "z", 8);
  QSeries p = theta_V_pair(wy, wz, 2);
  GradedElement Wi = ch_adjoint(wy), Wj = ch_adjoint(wz);
  auto c = [&](long v) { return GradedElement::constant(t, D, v); };
  EXPECT_EQ(p.coeff_whole(1), Wi + Wj - c(16));
  GradedElement Wbi = extract_Wbar(theta_V(wy, 2), Wi);
  GradedElement Wbj = extract_Wbar(theta_V(wz, 2), Wj);
  EXPECT_EQ(p.coeff_whole(2), Wi * Wj - (Wi + Wj) * Rational(16) + Wbi + Wbj + c(104));
}

TEST(ThetaV, Specialization) {
  auto t = ytable(false);
  auto w = e8_forms(t, 8, "y", 4);
  for (int i = 4; i < 8; ++i) EXPECT_TRUE(w[i].is_zero());
  EXPECT_EQ(ch_adjoint(w).constant_term(), 248);
}
