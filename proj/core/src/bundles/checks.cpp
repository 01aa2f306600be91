#include "egv/bundles/bundles.hpp"
#include "egv/errors.hpp"
#include "egv/theta/theta.hpp"

namespace egv {

namespace {

constexpr int D8 = QSeries::kDenom;

std::vector<std::string> numbered(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

TablePtr even_table(const std::vector<std::string>& names) {
  VariableTable::Builder b;
  for (const auto& n : names) b.add_even(n);
  return b.build();
}

// First (q-power, monomial) where a and b differ, or empty.
std::string first_difference(const QSeries& a, const QSeries& b) {
  QSeries d = a - b;
  if (d.is_zero()) return {};
  const auto& [e, c] = *d.coeffs().begin();
  const auto& t = c.terms().front();
  GradedElement mono = GradedElement::from_monomial(c.table(), c.degree_cap(), t.mono, 1);
  return "q^" + std::to_string(e) + "/8, monomial " + mono.to_string() + ", difference " +
         t.coeff.get_str();
}

}  // namespace

CheckReport theta_quotient_crosscheck(int k, int N, int D) {
  if (k < 1) throw UsageError("theta_quotient_crosscheck: k must be positive");
  CheckReport rep;
  rep.name = "theta quotient crosscheck k=" + std::to_string(k);
  const int pairs = 2 * k - 1;
  auto names = numbered("x", pairs);
  TablePtr t = even_table(names);
  RootBundle tm = RootBundle::real_from_variables(t, D, names);
  GradedElement A = ahat(tm);

  std::vector<GradedElement> xs;
  for (const auto& n : names) xs.push_back(GradedElement::variable(t, D, n));
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(pairs));

  const BundleSeriesKind kinds[] = {BundleSeriesKind::kTheta1, BundleSeriesKind::kTheta2,
                                    BundleSeriesKind::kTheta3};
  rep.passed = true;
  for (int a = 1; a <= 3; ++a) {
    QSeries lhs = bundle_series({kinds[a - 1], tm, std::nullopt, std::nullopt}, N);
    lhs = a == 1 ? lhs * (A * spinor_ch(tm)) : lhs * (A * Rational(scale));
    QSeries rhs = QSeries::constant(t, D, N * D8, 1);
    for (const auto& x : xs) rhs = rhs * witten_factor(x, N) * twist_factor(a, x, N);
    std::string diff = first_difference(lhs, rhs);
    if (diff.empty()) {
      rep.details.push_back("theta" + std::to_string(a) + ": equal to q^" + std::to_string(N) +
                            ", degree " + std::to_string(D));
    } else {
      rep.passed = false;
      rep.details.push_back("theta" + std::to_string(a) + ": differs at " + diff);
    }
  }
  return rep;
}

CheckReport qe_first_order_check(int e_pairs, int D) {
  CheckReport rep;
  rep.name = "Q(E) first-order coefficient";
  auto names = numbered("e", e_pairs);
  TablePtr t = even_table(names);
  RootBundle e = RootBundle::real_from_variables(t, D, names);
  QSeries qe = bundle_series({BundleSeriesKind::kQE, std::nullopt, e, std::nullopt}, 1);

  // Independent route: ch(Λ²E) = (ch(E)² − ψ²ch(E))/2, Λ²Ẽ = Λ²E − N·E + N(N+1)/2.
  const int n = e.rank();
  GradedElement chE = ch(e);
  RootBundle doubled(t, D);
  for (const auto& r : e.roots()) doubled.add_root(r.root * Rational(2), r.multiplicity);
  GradedElement psi2 = ch(doubled);
  GradedElement lam2 = (chE * chE - psi2) * make_rational(1, 2);
  GradedElement one = GradedElement::constant(t, D, 1);
  GradedElement lam2t = lam2 - chE * Rational(n) + one * make_rational(n * (n + 1), 2);
  GradedElement et = chE - one * Rational(n);
  GradedElement expected = spinor_ch(e) * (lam2t * Rational(2) - et * et + et);

  GradedElement got = qe.coeff_whole(1);
  rep.passed = got == expected;
  rep.details.push_back(rep.passed ? "q^1 coefficient matches Δ(E)⊗(2Λ²Ẽ − Ẽ⊗Ẽ + Ẽ)"
                                   : "q^1 coefficient differs: " + (got - expected).to_string());
  // The q^{1/2} coefficient must cancel between Λ_{−q^{1/2}} and Λ_{q^{1/2}}.
  if (!qe.coeff(D8 / 2).is_zero()) {
    rep.passed = false;
    rep.details.push_back("unexpected q^{1/2} coefficient");
  }
  return rep;
}

AgwReport agw_check(int pairs, int D) {
  AgwReport out;
  out.pairs = pairs;
  out.report.name = "gravitational anomaly cancellation in degree 12";
  auto names = numbered("x", pairs);
  TablePtr t = even_table(names);
  RootBundle tm = RootBundle::real_from_variables(t, D, names);
  GradedElement A = ahat(tm);
  GradedElement L12 = degree_part(lhat(tm), 12);
  GradedElement AC12 = degree_part(A * ch(tm), 12);
  GradedElement A12 = degree_part(A, 12);

  out.literal_holds = L12 == AC12 - A12 * Rational(32);
  out.standard_holds = L12 == AC12 * Rational(8) - A12 * Rational(32);

  // Fit L = a·AC + b·A from two monomials with a nonsingular 2×2 system.
  const auto& terms = AC12.terms();
  bool solved = false;
  for (std::size_t i = 0; i < terms.size() && !solved; ++i) {
    for (std::size_t j = i + 1; j < terms.size() && !solved; ++j) {
      Rational a11 = terms[i].coeff, a12 = A12.coefficient(terms[i].mono);
      Rational a21 = terms[j].coeff, a22 = A12.coefficient(terms[j].mono);
      Rational det = a11 * a22 - a12 * a21;
      if (det == 0) continue;
      solved = true;
      Rational l1 = L12.coefficient(terms[i].mono), l2 = L12.coefficient(terms[j].mono);
      Rational a = (l1 * a22 - a12 * l2) / det;
      Rational b = (a11 * l2 - l1 * a21) / det;
      if (L12 == AC12 * a + A12 * b) out.fitted = std::make_pair(a, b);
    }
  }

  out.report.passed = out.standard_holds && !L12.is_zero();
  out.report.details.push_back(std::string("L^(12) = (A ch(T_C M) - 32 A)^(12) as printed: ") +
                               (out.literal_holds ? "holds" : "fails"));
  out.report.details.push_back(std::string("L^(12) = (8 A ch(T_C M) - 32 A)^(12): ") +
                               (out.standard_holds ? "holds" : "fails"));
  if (out.fitted) {
    out.report.details.push_back("fitted coefficients a = " + out.fitted->first.get_str() +
                                 ", b = " + out.fitted->second.get_str());
  } else {
    out.report.details.push_back("no combination a*A ch + b*A reproduces L in degree 12");
  }
  return out;
}

}  // namespace egv
