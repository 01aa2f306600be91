#include "egv/bundles/bundles.hpp"
#include "egv/errors.hpp"
#include "egv/theta/theta.hpp"

namespace egv {

std::string odd_generator_name(int degree) { return "g" + std::to_string(degree); }

namespace {

// Adds c·γ_{4k−1} to acc, checking that the generator exists when needed.
void add_generator(TermAccumulator& acc, const TablePtr& target, int target_cap, int k,
                   const Rational& c) {
  if (c == 0 || 4 * k - 1 > target_cap) return;
  auto idx = target->find(odd_generator_name(4 * k - 1));
  if (!idx) {
    throw UsageError("target table lacks odd generator " + odd_generator_name(4 * k - 1));
  }
  Monomial m{};
  m[*idx] = 1;
  acc.add_term(m, 4 * k - 1, c);
}

// Scale (2k)!/2 turning the n-linear u^{2k} coefficient into the γ_{4k−1}
// coefficient (ch_{4k} = p_{2k}/(2k)! and p_{2k} = 2n·u^{2k} on n equal pairs).
Rational generator_scale(int k) { return factorial(static_cast<unsigned>(2 * k)) / Rational(2); }

}  // namespace

GradedElement transgress(const GradedElement& f, const std::vector<std::string>& e_vars,
                         const TablePtr& target, int target_cap, bool keep_c3) {
  const auto& table = *f.table();
  const std::size_t P = e_vars.size();
  std::vector<std::size_t> idx;
  for (const auto& n : e_vars) {
    idx.push_back(table.index(n));
    if (table[idx.back()].degree != 2) throw UsageError("transgress: E roots must have degree 2");
  }
  std::vector<int> slot(table.size(), -1);
  for (std::size_t i = 0; i < P; ++i) slot[idx[i]] = static_cast<int>(i);

  // values[upow][n] = coefficient of u^upow in f(u, …, u, 0, …, 0) with n copies of u
  std::map<int, std::vector<Rational>> values;
  for (const auto& t : f.terms()) {
    int highest = -1;
    int upow = 0;
    for (std::size_t v = 0; v < table.size(); ++v) {
      if (t.mono[v] == 0) continue;
      if (slot[v] < 0) {
        throw UsageError("transgress: element depends on non-E variable '" + table[v].name + "'");
      }
      highest = std::max(highest, slot[v]);
      upow += t.mono[v];
    }
    auto& row = values.try_emplace(upow, std::vector<Rational>(P + 1, 0)).first->second;
    for (std::size_t n = static_cast<std::size_t>(highest + 1); n <= P; ++n) row[n] += t.coeff;
  }

  TermAccumulator acc(target, target_cap);
  for (auto& [upow, row] : values) {
    if (upow == 0) continue;
    // The n-degree is at most the number of power sums, i.e. upow/2.
    if (upow / 2 > static_cast<int>(P)) {
      throw UsageError("transgress: too few E pairs for u^" + std::to_string(upow));
    }
    // Newton forward differences; d/dn C(n, j) at 0 is (−1)^{j−1}/j.
    std::vector<Rational> diff = row;
    Rational lin = 0;
    for (std::size_t j = 1; j <= P; ++j) {
      for (std::size_t i = 0; i + j <= P; ++i) diff[i] = diff[i + 1] - diff[i];
      Rational term = diff[0] / Rational(static_cast<long>(j));
      lin += (j % 2 == 1) ? term : Rational(-term);
    }
    if (lin == 0) continue;
    if (upow % 2 != 0) throw UsageError("transgress: element is not even in the E roots");
    int k = upow / 2;
    if (k == 1 && !keep_c3) continue;
    add_generator(acc, target, target_cap, k, lin * generator_scale(k));
  }
  return acc.finish();
}

GradedElement odd_model(const RootBundle& b, const RootBundle& e, const std::vector<std::string>& e_vars,
                        const TablePtr& target, int target_cap, bool keep_c3) {
  if (!e.real_type()) throw UsageError("odd_model: E must be real-type");
  return transgress(spinor_ch(e) * ch(b), e_vars, target, target_cap, keep_c3);
}

namespace {

int max_generator_index(int target_cap) { return (target_cap + 1) / 4; }

}  // namespace

QSeries odd_character_qe(const TablePtr& target, int target_cap, int N, const OddModelConfig& cfg) {
  QSeries out(target, target_cap, N * QSeries::kDenom);
  const int K = max_generator_index(target_cap);
  if (K == 0 || (K == 1 && !cfg.keep_c3)) return out;

  TablePtr ut = VariableTable::Builder{}.add_even("u").build();
  const int ucap = 4 * K;
  GradedElement u = GradedElement::variable(ut, ucap, "u");
  QSeries G = twist_factor(1, u, N) * twist_factor(2, u, N) * twist_factor(3, u, N);
  QSeries L = series_log(G);  // G(0) = 1 here; the factor 2 is the 2^{pairs} prefactor

  Integer two_p;
  mpz_ui_pow_ui(two_p.get_mpz_t(), 2, static_cast<unsigned long>(cfg.e_pairs));
  for (const auto& [e, c] : L.coeffs()) {
    if (e % QSeries::kDenom != 0) throw UsageError("odd_character_qe: unexpected half-integer power");
    TermAccumulator acc(target, target_cap);
    for (int k = cfg.keep_c3 ? 1 : 2; k <= K; ++k) {
      Monomial m{};
      m[0] = static_cast<std::uint8_t>(2 * k);
      Rational a = c.coefficient(m);
      add_generator(acc, target, target_cap, k, Rational(two_p) * a * generator_scale(k));
    }
    out.set(e, acc.finish());
  }
  return out;
}

QSeries odd_character_qe_via_bundles(const TablePtr& target, int target_cap, int N,
                                     const OddModelConfig& cfg) {
  QSeries out(target, target_cap, N * QSeries::kDenom);
  const int K = max_generator_index(target_cap);
  if (K == 0 || (K == 1 && !cfg.keep_c3)) return out;
  VariableTable::Builder b;
  std::vector<std::string> names;
  for (int i = 1; i <= cfg.e_pairs; ++i) {
    names.push_back("e" + std::to_string(i));
    b.add_even(names.back());
  }
  TablePtr et = b.build();
  RootBundle e = RootBundle::real_from_variables(et, 4 * K, names);
  QSeries qe = bundle_series({BundleSeriesKind::kQE, std::nullopt, e, std::nullopt}, N);
  for (const auto& [exp8, c] : qe.coeffs()) {
    out.set(exp8, transgress(c, names, target, target_cap, cfg.keep_c3));
  }
  return out;
}

}  // namespace egv
