#include "egv/e8/e8.hpp"
#include "egv/errors.hpp"
#include "egv/theta/theta.hpp"
#include "egv/verifier/verifier.hpp"

namespace egv {

namespace {

// c2(W) for one E8 factor: minus the degree-4 part of the adjoint character.
GradedElement c2_of(const TablePtr& t, int cap, const std::string& prefix, int vars) {
  GradedElement chW = ch_adjoint(e8_forms(t, 4, prefix, vars));
  return (-degree_part(chW, 4)).with_cap(cap);
}

QSeries gauge_block(const CaseSpec& c, const CaseLayout& L, int cap) {
  const int N = c.q_order;
  const bool pair = c.gauge == Gauge::kE8xE8;
  QSeries theta = theta_V(e8_forms(L.table, cap, "y", c.e8_vars), N);
  GradedElement c2 = c2_of(L.table, cap, "y", c.e8_vars);
  if (pair) {
    theta = theta * theta_V(e8_forms(L.table, cap, "z", c.e8_vars), N);
    c2 += c2_of(L.table, cap, "z", c.e8_vars);
  }
  if (c.controls.drop_e2) return theta;
  // exp((1/24)E2 · (1/30)c2)
  QSeries arg = eisenstein(2, N, L.table, cap) * (c2 * make_rational(1, 720));
  return series_exp(arg) * theta;
}

QSeries family_block(const CaseSpec& c, const CaseLayout& L, int cap) {
  const int N = c.q_order;
  if (c.family == Family::kSpin4kMinus1) {
    RootBundle tm = RootBundle::real_from_variables(L.table, cap, L.tm);
    GradedElement A = ahat(tm);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(2 * family_k(c) - 1));
    QSeries t1 = bundle_series({BundleSeriesKind::kTheta1, tm, std::nullopt, std::nullopt}, N);
    QSeries t2 = bundle_series({BundleSeriesKind::kTheta2, tm, std::nullopt, std::nullopt}, N);
    QSeries t3 = bundle_series({BundleSeriesKind::kTheta3, tm, std::nullopt, std::nullopt}, N);
    return t1 * (A * spinor_ch(tm)) + (t2 + t3) * (A * Rational(scale));
  }
  const bool plus = c.family == Family::kSpinC4kPlus1;
  RootBundle tm = RootBundle::real_from_variables(L.table, cap, L.tm, plus ? 1 : 0);
  RootBundle lb = RootBundle::real_from_variables(L.table, cap, {*L.l});
  GradedElement l = GradedElement::variable(L.table, cap, *L.l);
  GradedElement front = ahat(tm) * exp_nilpotent(l * make_rational(1, 2));
  auto kind = plus ? BundleSeriesKind::kThetaSpinCStar : BundleSeriesKind::kThetaSpinC;
  return bundle_series({kind, tm, std::nullopt, lb}, N) * front;
}

}  // namespace

AssembledCase assemble(const CaseSpec& c) {
  AssembledCase out;
  out.spec = c;
  out.layout = make_layout(c);
  const CaseLayout& L = out.layout;
  const int cap = L.even_cap;

  out.even = (family_block(c, L, cap) * gauge_block(c, L, cap)).with_degree_cap(L.top_degree);

  OddModelConfig cfg;
  cfg.e_pairs = c.e_pairs;
  cfg.keep_c3 = c.controls.relax_c3;
  out.odd = odd_character_qe(L.table, L.top_degree, c.q_order, cfg);

  const int top = L.top_degree;
  out.top = (out.even * out.odd).map_coeffs([top](const GradedElement& g) { return degree_part(g, top); });
  return out;
}

GradedElement impose_spin_c_relation(const GradedElement& a, Family family) {
  if (family == Family::kSpin4kMinus1) return a;
  const auto& table = a.table();
  auto li = table->find("l");
  if (!li) throw UsageError("impose_spin_c_relation: table has no variable 'l'");
  GradedElement s(table, a.degree_cap());
  for (std::size_t v = 0; v < table->size(); ++v) {
    const auto& var = (*table)[v];
    if (var.name.size() > 1 && var.name[0] == 'x') {
      GradedElement x = GradedElement::variable(table, a.degree_cap(), v);
      s += x * x;
    }
  }
  if (family == Family::kSpinC4kMinus1) s *= make_rational(1, 3);

  std::vector<GradedElement> spow{GradedElement::constant(table, a.degree_cap(), 1)};
  TermAccumulator acc(table, a.degree_cap());
  for (const auto& t : a.terms()) {
    const int e = t.mono[*li];
    if (e < 2) {
      acc.add_term(t.mono, t.degree, t.coeff);
      continue;
    }
    const std::size_t m = static_cast<std::size_t>(e / 2);
    while (spow.size() <= m) spow.push_back(spow.back() * s);
    Monomial rest = t.mono;
    rest[*li] = static_cast<std::uint8_t>(e % 2);
    acc.add(GradedElement::from_monomial(table, a.degree_cap(), rest, t.coeff) * spow[m]);
  }
  return acc.finish();
}

QSeries impose_spin_c_relation(const QSeries& s, Family family) {
  if (family == Family::kSpin4kMinus1) return s;
  return s.map_coeffs([family](const GradedElement& g) { return impose_spin_c_relation(g, family); });
}

}  // namespace egv
