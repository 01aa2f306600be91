#include <gtest/gtest.h>

#include <json.hpp>

#include "egv/errors.hpp"
#include "egv/verifier/report_json.hpp"
#include "egv/verifier/verifier.hpp"

using namespace egv;

TEST(Catalog, WeightsAndPairs) {
  EXPECT_EQ(expected_weight(case_by_id("T3.3")), 8);
  EXPECT_EQ(expected_weight(case_by_id("T3.4")), 10);
  EXPECT_EQ(expected_weight(case_by_id("T3.5")), 12);
  EXPECT_EQ(expected_weight(case_by_id("T3.11")), 8);
  EXPECT_EQ(expected_weight(case_by_id("T4.4")), 16);
  EXPECT_EQ(expected_weight(case_by_id("T4.9")), 14);
  EXPECT_EQ(expected_weight(case_by_id("X9")), 12);
  EXPECT_EQ(tm_pairs(case_by_id("T3.3")), 3);
  EXPECT_EQ(tm_pairs(case_by_id("T3.12")), 6);
  EXPECT_EQ(case_by_id("t4.4").e8_vars, 4);
  EXPECT_THROW(case_by_id("T5.1"), UsageError);
}

TEST(Catalog, Validation) {
  CaseSpec c = case_by_id("T3.3");
  c.dim = 9;
  EXPECT_THROW(validate(c), UsageError);
  c = case_by_id("T3.11");
  c.dim = 11;
  EXPECT_THROW(validate(c), UsageError);
  c = case_by_id("T3.3");
  c.degree_cap = 5;
  EXPECT_THROW(validate(c), UsageError);
  c = case_by_id("T4.2");
  c.q_order = 0;
  EXPECT_THROW(validate(c), UsageError);
  EXPECT_THROW(profile_case_ids("slow"), UsageError);
  EXPECT_EQ(profile_case_ids("quick").size(), 6u);
  EXPECT_EQ(profile_case_ids("full").size(), 12u);
  EXPECT_EQ(profile_case_ids("deep").size(), 14u);
}

TEST(SpinCRelation, Reductions) {
  auto t = VariableTable::Builder{}.add_even("x1").add_even("x2").add_even("l").build();
  const int D = 12;
  auto x1 = GradedElement::variable(t, D, "x1"), x2 = GradedElement::variable(t, D, "x2");
  auto l = GradedElement::variable(t, D, "l");
  GradedElement s = (x1 * x1 + x2 * x2) * make_rational(1, 3);
  EXPECT_EQ(impose_spin_c_relation(l * l, Family::kSpinC4kMinus1), s);
  EXPECT_EQ(impose_spin_c_relation(l * l * l, Family::kSpinC4kMinus1), l * s);
  EXPECT_EQ(impose_spin_c_relation(l * l * l * l, Family::kSpinC4kPlus1), s * s * Rational(9));
  GradedElement fixed = l * x1 * x1 + x2;
  EXPECT_EQ(impose_spin_c_relation(fixed, Family::kSpinC4kMinus1), fixed);
  EXPECT_EQ(impose_spin_c_relation(l * l, Family::kSpin4kMinus1), l * l);
}

TEST(Assemble, TopSeriesLivesInTheManifoldDegree) {
  CaseSpec c = case_by_id("T3.11");
  AssembledCase a = assemble(c);
  EXPECT_EQ(a.layout.even_cap, 2);
  EXPECT_FALSE(a.top.is_zero());
  for (const auto& [e, g] : a.top.coeffs()) {
    for (const auto& t : g.terms()) EXPECT_EQ(t.degree, 9);
  }
}

TEST(Assemble, OddFactorStartsAtG7) {
  AssembledCase a = assemble(case_by_id("T3.3"));
  auto g7 = a.layout.table->index("g7");
  auto g3 = a.layout.table->index("g3");
  for (const auto& [e, g] : a.odd.coeffs()) {
    for (const auto& t : g.terms()) {
      EXPECT_EQ(t.mono[g3], 0);
      EXPECT_TRUE(t.mono[g7] == 1 || t.degree > 7);
    }
  }
}

class QuickCases : public ::testing::TestWithParam<const char*> {};

TEST_P(QuickCases, ResidualZeroAndControls) {
  VerificationReport r = verify_theorem(case_by_id(GetParam()));
  EXPECT_TRUE(r.residual_zero);
  EXPECT_FALSE(r.vacuous);
  EXPECT_TRUE(r.negative_control_failed_as_expected);
  for (const auto& row : r.identity_table) EXPECT_TRUE(row.matched || row.erratum) << row.paper_coefficient;
  EXPECT_TRUE(r.passed());
  bool consistent_at_weight = false;
  for (const auto& [w, ok] : r.weight_scan) {
    if (ok) EXPECT_EQ(w, r.weight);
    consistent_at_weight = consistent_at_weight || (ok && w == r.weight);
  }
  EXPECT_TRUE(consistent_at_weight);
}

INSTANTIATE_TEST_SUITE_P(Profile, QuickCases,
                         ::testing::Values("T3.3", "T3.8", "T3.11", "T4.2", "T4.6", "X9"));

TEST(Verify, IdentityRowsForDimSeven) {
  VerificationReport r = verify_theorem(case_by_id("T3.3"), false);
  ASSERT_EQ(r.identity_table.size(), 2u);
  EXPECT_EQ(r.identity_table[0].paper_coefficient, "480");
  EXPECT_EQ(r.identity_table[1].paper_coefficient, "61920");
}

TEST(Verify, RelaxedC3Breaks) {
  CaseSpec c = case_by_id("T3.3");
  c.controls.relax_c3 = true;
  VerificationReport r = verify_theorem(c, false);
  EXPECT_FALSE(r.residual_zero);
  EXPECT_FALSE(r.passed());
}

TEST(Verify, Weight16ErratumRow) {
  VerificationReport r = verify_theorem(case_by_id("T4.4"), false);
  EXPECT_TRUE(r.residual_zero);
  ASSERT_EQ(r.identity_table.size(), 2u);
  EXPECT_TRUE(r.identity_table[0].matched);
  EXPECT_FALSE(r.identity_table[1].matched);
  EXPECT_TRUE(r.identity_table[1].erratum);
}

TEST(Verify, MonotoneInQOrder) {
  for (int N : {2, 3, 5}) {
    CaseSpec c = case_by_id("T4.2");
    c.q_order = N;
    EXPECT_TRUE(verify_theorem(c, false).residual_zero) << N;
  }
}

TEST(Verify, VacuousSeriesFails) {
  QSeries zero(scalar_table(), 0, 32);
  EXPECT_TRUE(analyse_top(zero, 8, 4).vacuous);
}

TEST(Json, StableKeys) {
  VerificationReport r = verify_theorem(case_by_id("T3.3"));
  auto j = nlohmann::json::parse(to_json(r));
  for (const char* k : {"case", "weight", "lambdas", "residual_zero", "identity_table",
                        "negative_control_failed_as_expected", "q_order", "degree_cap", "elapsed_ms", "notes"}) {
    EXPECT_TRUE(j.contains(k)) << k;
  }
  EXPECT_EQ(j["identity_table"][0]["q"], 1);
  EXPECT_EQ(j["identity_table"][0]["paper_coefficient"], "480");
  EXPECT_EQ(j["identity_table"][0]["matched"], true);
}
