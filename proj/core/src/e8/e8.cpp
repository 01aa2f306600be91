#include "egv/e8/e8.hpp"

#include "egv/errors.hpp"
#include "egv/theta/theta.hpp"

namespace egv {

E8RootSystem e8_roots() {
  E8RootSystem rs;
  for (int k = 0; k < 8; ++k) {
    for (int l = k + 1; l < 8; ++l) {
      for (int sk : {1, -1}) {
        for (int sl : {1, -1}) {
          std::array<Rational, 8> r;
          for (auto& x : r) x = 0;
          r[k] = sk;
          r[l] = sl;
          rs.roots.push_back(r);
        }
      }
    }
  }
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::array<Rational, 8> r;
    for (int i = 0; i < 8; ++i) r[i] = (mask >> i & 1u) ? make_rational(-1, 2) : make_rational(1, 2);
    rs.roots.push_back(r);
  }
  return rs;
}

std::array<std::array<Rational, 8>, 8> e8_gram_sum(const E8RootSystem& rs) {
  std::array<std::array<Rational, 8>, 8> g;
  for (auto& row : g) {
    for (auto& x : row) x = 0;
  }
  for (const auto& r : rs.roots) {
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) g[a][b] += r[a] * r[b];
    }
  }
  return g;
}

namespace {

void require_eight(const std::vector<GradedElement>& w) {
  if (w.size() != 8) throw UsageError("E8 data needs exactly 8 curvature forms");
}

}  // namespace

GradedElement ch_adjoint(const std::vector<GradedElement>& w) {
  require_eight(w);
  const auto& table = w[0].table();
  const int cap = w[0].degree_cap();
  static const E8RootSystem rs = e8_roots();
  TermAccumulator acc(table, cap);
  acc.add(GradedElement::constant(table, cap, 8));
  // Roots come in ± pairs; summing exp(L) + exp(−L) only needs the even powers.
  std::vector<Rational> cosh2(static_cast<std::size_t>(cap / 2) + 1, 0);
  for (std::size_t n = 0; n < cosh2.size(); n += 2) cosh2[n] = Rational(2) / factorial(static_cast<unsigned>(n));
  for (const auto& r : rs.roots) {
    // take the representative whose first nonzero coordinate is positive
    int first = 0;
    while (r[first] == 0) ++first;
    if (r[first] < 0) continue;
    GradedElement L(table, cap);
    for (int i = 0; i < 8; ++i) {
      if (r[i] != 0) L += w[i] * r[i];
    }
    acc.add(apply_series(cosh2, L));
  }
  return acc.finish();
}

QSeries theta_V(const std::vector<GradedElement>& w, int N) {
  require_eight(w);
  QSeries p1 = theta_expansion(ThetaKind::kTheta1, w[0], N);
  QSeries p2 = theta_expansion(ThetaKind::kTheta2, w[0], N);
  QSeries p3 = theta_expansion(ThetaKind::kTheta3, w[0], N);
  for (std::size_t l = 1; l < 8; ++l) {
    p1 = p1 * theta_expansion(ThetaKind::kTheta1, w[l], N);
    p2 = p2 * theta_expansion(ThetaKind::kTheta2, w[l], N);
    p3 = p3 * theta_expansion(ThetaKind::kTheta3, w[l], N);
  }
  return (p1 + p2 + p3) * make_rational(1, 2);
}

GradedElement extract_Wbar(const QSeries& thetaV, const GradedElement& chW) {
  GradedElement twenty = GradedElement::constant(chW.table(), chW.degree_cap(), 20);
  return thetaV.coeff_whole(2) + chW * Rational(8) - twenty;
}

E8CharacterData e8_character_data(const std::vector<GradedElement>& w, int N) {
  if (N < 2) throw UsageError("e8_character_data: N must be at least 2");
  E8CharacterData d;
  d.w = w;
  d.chW = ch_adjoint(w);
  d.c2W = -degree_part(d.chW, 4);
  d.thetaV = theta_V(w, N);
  d.chWbar = extract_Wbar(d.thetaV, d.chW);
  return d;
}

QSeries theta_V_pair(const std::vector<GradedElement>& wi, const std::vector<GradedElement>& wj, int N) {
  return theta_V(wi, N) * theta_V(wj, N);
}

std::vector<GradedElement> e8_forms(const TablePtr& table, int degree_cap, const std::string& prefix,
                                    int active_vars) {
  if (active_vars < 0 || active_vars > 8) throw UsageError("e8 active variables must be in 0..8");
  std::vector<GradedElement> w;
  for (int l = 1; l <= 8; ++l) {
    if (l <= active_vars) {
      w.push_back(GradedElement::variable(table, degree_cap, prefix + std::to_string(l)));
    } else {
      w.emplace_back(table, degree_cap);
    }
  }
  return w;
}

}  // namespace egv
