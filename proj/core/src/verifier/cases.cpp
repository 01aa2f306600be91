#include <algorithm>
#include <cctype>

#include "egv/errors.hpp"
#include "egv/verifier/verifier.hpp"

namespace egv {

std::string to_string(Family f) {
  switch (f) {
    case Family::kSpin4kMinus1:
      return "spin 4k-1";
    case Family::kSpinC4kMinus1:
      return "spin^c 4k-1";
    case Family::kSpinC4kPlus1:
      return "spin^c 4k+1";
  }
  return "?";
}

std::string to_string(Gauge g) { return g == Gauge::kE8 ? "E8" : "E8xE8"; }

int family_k(const CaseSpec& c) {
  return c.family == Family::kSpinC4kPlus1 ? (c.dim - 1) / 4 : (c.dim + 1) / 4;
}

int expected_weight(const CaseSpec& c) {
  return 2 * family_k(c) + (c.gauge == Gauge::kE8 ? 4 : 8);
}

int tm_pairs(const CaseSpec& c) {
  const int k = family_k(c);
  return c.family == Family::kSpinC4kPlus1 ? 2 * k : 2 * k - 1;
}

void validate(const CaseSpec& c) {
  const bool plus = c.family == Family::kSpinC4kPlus1;
  if (plus && !(c.dim == 9 || c.dim == 13)) {
    throw UsageError("case " + c.id + ": the 4k+1 family uses dimension 9 or 13");
  }
  if (!plus && !(c.dim == 7 || c.dim == 11 || c.dim == 15)) {
    throw UsageError("case " + c.id + ": 4k-1 families use dimension 7, 11 or 15");
  }
  if (c.q_order < 1 || c.q_order > 12) throw UsageError("q-order must be in 1..12");
  if (c.degree_cap != 0 && c.degree_cap < c.dim) {
    throw UsageError("degree cap " + std::to_string(c.degree_cap) + " is below the dimension " +
                     std::to_string(c.dim) + " of case " + c.id);
  }
  if (c.e8_vars != 4 && c.e8_vars != 8) throw UsageError("e8-vars must be 4 or 8");
  if (c.e_pairs < 1 || c.e_pairs > 8) throw UsageError("E pairs must be in 1..8");
  const int dimension = modular_dimension(expected_weight(c));
  if (c.q_order + 1 < dimension) {
    throw UsageError("q-order " + std::to_string(c.q_order) + " is too small for weight " +
                     std::to_string(expected_weight(c)));
  }
}

const std::vector<CaseSpec>& theorem_catalog() {
  static const std::vector<CaseSpec> cat = [] {
    std::vector<CaseSpec> v;
    auto add = [&v](std::string id, Family f, Gauge g, int dim, bool ext = false) {
      CaseSpec c;
      c.id = std::move(id);
      c.family = f;
      c.gauge = g;
      c.dim = dim;
      c.extension = ext;
      if (g == Gauge::kE8xE8 && dim == 15) c.e8_vars = 4;
      v.push_back(c);
    };
    add("T3.3", Family::kSpin4kMinus1, Gauge::kE8, 7);
    add("T3.4", Family::kSpin4kMinus1, Gauge::kE8, 11);
    add("T3.5", Family::kSpin4kMinus1, Gauge::kE8, 15);
    add("T3.8", Family::kSpinC4kMinus1, Gauge::kE8, 7);
    add("T3.9", Family::kSpinC4kMinus1, Gauge::kE8, 11);
    add("T3.11", Family::kSpinC4kPlus1, Gauge::kE8, 9);
    add("T3.12", Family::kSpinC4kPlus1, Gauge::kE8, 13);
    add("T4.2", Family::kSpin4kMinus1, Gauge::kE8xE8, 7);
    add("T4.3", Family::kSpin4kMinus1, Gauge::kE8xE8, 11);
    add("T4.4", Family::kSpin4kMinus1, Gauge::kE8xE8, 15);
    add("T4.6", Family::kSpinC4kMinus1, Gauge::kE8xE8, 7);
    add("T4.7", Family::kSpinC4kMinus1, Gauge::kE8xE8, 11);
    add("T4.9", Family::kSpinC4kPlus1, Gauge::kE8xE8, 13);
    add("X9", Family::kSpinC4kPlus1, Gauge::kE8xE8, 9, true);
    return v;
  }();
  return cat;
}

CaseSpec case_by_id(const std::string& id) {
  auto upper = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::toupper(ch); });
    return s;
  };
  for (const auto& c : theorem_catalog()) {
    if (upper(c.id) == upper(id)) return c;
  }
  std::string known;
  for (const auto& c : theorem_catalog()) known += (known.empty() ? "" : ", ") + c.id;
  throw UsageError("unknown case id '" + id + "' (known: " + known + ")");
}

CaseLayout make_layout(const CaseSpec& c) {
  validate(c);
  CaseLayout L;
  L.top_degree = c.dim;
  L.even_cap = c.dim - (c.controls.relax_c3 ? 3 : 7);
  VariableTable::Builder b;
  for (int i = 1; i <= tm_pairs(c); ++i) {
    L.tm.push_back("x" + std::to_string(i));
    b.add_even(L.tm.back());
  }
  if (c.family != Family::kSpin4kMinus1) {
    L.l = "l";
    b.add_even("l");
  }
  for (int i = 1; i <= c.e8_vars; ++i) {
    L.y.push_back("y" + std::to_string(i));
    b.add_even(L.y.back());
  }
  if (c.gauge == Gauge::kE8xE8) {
    for (int i = 1; i <= c.e8_vars; ++i) {
      L.z.push_back("z" + std::to_string(i));
      b.add_even(L.z.back());
    }
  }
  for (int d = 3; d <= c.dim; d += 4) b.add_odd(odd_generator_name(d), d);
  L.table = b.build();
  return L;
}

}  // namespace egv
