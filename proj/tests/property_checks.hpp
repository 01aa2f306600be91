// Randomized exact-arithmetic properties shared by the property tests and the
// acceptance binary. Each check draws one instance and reports whether it holds.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "egv/bundles/bundles.hpp"
#include "egv/modforms/modforms.hpp"

namespace egv::props {

constexpr int kInstances = 200;

struct Gen {
  std::mt19937 rng;
  TablePtr table =
      VariableTable::Builder{}.add_even("a").add_even("b").add_even("c", 4).add_odd("g", 3).build();

  explicit Gen(unsigned seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Rational rational() { return make_rational(uniform(-9, 9), uniform(1, 6)); }

  GradedElement element(int cap, bool unit = false) {
    GradedElement e(table, cap);
    const int terms = uniform(1, 5);
    for (int i = 0; i < terms; ++i) {
      Monomial m{};
      m[0] = static_cast<std::uint8_t>(uniform(0, 2));
      m[1] = static_cast<std::uint8_t>(uniform(0, 2));
      m[2] = static_cast<std::uint8_t>(uniform(0, 1));
      m[3] = static_cast<std::uint8_t>(uniform(0, 3) == 0);
      e += GradedElement::from_monomial(table, cap, m, rational());
    }
    if (unit) {
      e = e.filter([](const GradedElement::Term& t) { return t.degree > 0; });
      Rational c = rational();
      if (c == 0) c = 1;
      e += GradedElement::constant(table, cap, c);
    }
    return e;
  }

  // Steps of q^{1/2} or q^1; `unit` makes the q^0 coefficient invertible,
  // `nilpotent_head` strips its constant.
  QSeries series(int cap, int order8, bool unit = false, bool nilpotent_head = false) {
    QSeries s(table, cap, order8);
    for (int e = 0; e <= order8; e += 8 / uniform(1, 2)) {
      if (e > 0 && uniform(0, 2) == 0) continue;
      GradedElement c = element(cap, e == 0 && unit);
      if (e == 0 && nilpotent_head) c = c.filter([](const GradedElement::Term& t) { return t.degree > 0; });
      s.set(e, c);
    }
    return s;
  }
};

inline bool ring_axioms(Gen& g) {
  const int cap = g.uniform(4, 10);
  GradedElement a = g.element(cap), b = g.element(cap), c = g.element(cap);
  return (a * b) * c == a * (b * c) && a * b == b * a && a * (b + c) == a * b + a * c &&
         a + (b + c) == (a + b) + c && (a - a).is_zero();
}

inline bool degree_truncation(Gen& g) {
  const int low = g.uniform(0, 9);
  GradedElement a = g.element(10), b = g.element(10);
  return (a * b).with_cap(low) == a.with_cap(low) * b.with_cap(low);
}

inline bool order_truncation(Gen& g) {
  QSeries f = g.series(6, 32), h = g.series(6, 32);
  const int low = 8 * g.uniform(0, 3);
  return (f * h).with_order_cap(low) == f.with_order_cap(low) * h.with_order_cap(low) &&
         (f * h).with_degree_cap(3) == f.with_degree_cap(3) * h.with_degree_cap(3);
}

inline bool inverse_round_trip(Gen& g) {
  QSeries f = g.series(8, 24, true);
  GradedElement u = g.element(8, true);
  return f * series_inv(f) == QSeries::constant(f.table(), 8, 24, 1) &&
         u * inv_unit(u) == GradedElement::constant(g.table, 8, 1);
}

inline bool exp_round_trip(Gen& g) {
  QSeries f = g.series(8, 24, false, true);
  return series_exp(f) * series_exp(-f) == QSeries::constant(f.table(), 8, 24, 1) &&
         series_log(series_exp(f)) == f;
}

// Embeds random form-valued coordinates in a random weight and decomposes back.
inline bool decompose_of_embedding(Gen& g) {
  static const int weights[] = {4, 6, 8, 10, 12, 14, 16, 18, 20, 24};
  const int w = weights[g.uniform(0, 9)];
  const int cap = 6;
  EisensteinBasis b = basis(w, 5, g.table, cap);
  std::vector<GradedElement> lambdas;
  QSeries F(g.table, cap, 5 * QSeries::kDenom);
  for (std::size_t k = 0; k < b.dim(); ++k) {
    lambdas.push_back(g.element(cap));
    F += b.series[k] * lambdas.back();
  }
  DecompositionResult d = decompose(F, w, 5);
  return d.residual_zero && d.lambdas == lambdas;
}

inline bool chern_character_ring_map(Gen& g) {
  static const TablePtr t = VariableTable::Builder{}.add_even("a").add_even("b").build();
  auto bundle = [&] {
    RootBundle r(t, 8);
    const int n = g.uniform(1, 3);
    for (int k = 0; k < n; ++k) {
      GradedElement root = GradedElement::variable(t, 8, "a", g.uniform(-2, 2)) +
                           GradedElement::variable(t, 8, "b", g.uniform(-2, 2));
      r.add_root(root, g.uniform(-2, 2));
    }
    return r + RootBundle::trivial(t, 8, g.uniform(-2, 3));
  };
  RootBundle x = bundle(), y = bundle();
  QSeries s = power_series(PowerOp::kSym, x, 8, 1, 3);
  QSeries l = power_series(PowerOp::kLambda, x, 8, -1, 3);
  return ch(x + y) == ch(x) + ch(y) && ch(tensor(x, y)) == ch(x) * ch(y) &&
         s * l == QSeries::constant(t, 8, 24, 1);
}

struct Property {
  std::string name;
  unsigned seed;
  bool (*check)(Gen&);
};

inline const std::vector<Property>& all() {
  static const std::vector<Property> list = {
      {"ring axioms", 20240601, ring_axioms},
      {"degree truncation coherence", 7, degree_truncation},
      {"q-order truncation coherence", 11, order_truncation},
      {"inverse round trip", 13, inverse_round_trip},
      {"exp/log round trip", 17, exp_round_trip},
      {"decompose of embedding", 19, decompose_of_embedding},
      {"chern character ring map", 23, chern_character_ring_map},
  };
  return list;
}

// Number of instances that held, out of kInstances.
inline int run(const Property& p) {
  Gen g(p.seed);
  int held = 0;
  for (int i = 0; i < kInstances; ++i) held += p.check(g) ? 1 : 0;
  return held;
}

}  // namespace egv::props
