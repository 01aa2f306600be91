#include <map>

#include "egv/errors.hpp"
#include "egv/modforms/modforms.hpp"

namespace egv {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan inverse; returns false (and the rank-deficient column) when
// singular.
bool invert(Matrix m, Matrix& inv, std::size_t& bad_col) {
  const std::size_t n = m.size();
  inv.assign(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) {
      bad_col = c;
      return false;
    }
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rational piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return true;
}

}  // namespace

DecompositionResult decompose(const QSeries& F, int weight, int N) {
  constexpr int D8 = QSeries::kDenom;
  if (F.has_fractional_exponents()) {
    throw UsageError("decompose: series has fractional q-exponents");
  }
  if (N < 0 || N * D8 > F.order_cap()) {
    throw UsageError("decompose: N=" + std::to_string(N) + " exceeds the series order cap");
  }
  if (weight < 0 || weight % 2 != 0) {
    throw UsageError("decompose: weight must be even and nonnegative");
  }

  DecompositionResult res;
  res.weight = weight;
  res.checked_from = 0;
  res.checked_to = N;

  std::vector<QSeries> series;
  if (weight == 0) {
    series.push_back(QSeries::constant(F.table(), F.degree_cap(), N * D8, 1));
    res.basis_labels.push_back("1");
  } else if (weight >= 4) {
    EisensteinBasis b = basis(weight, N, F.table(), F.degree_cap());
    series = b.series;
    for (std::size_t i = 0; i < b.dim(); ++i) res.basis_labels.push_back(b.label(i));
  }
  const std::size_t d = series.size();
  if (static_cast<int>(d) > N + 1) {
    throw UsageError("decompose: N must be at least the basis dimension minus one");
  }

  Matrix m(d, std::vector<Rational>(d));
  for (std::size_t n = 0; n < d; ++n) {
    for (std::size_t i = 0; i < d; ++i) {
      m[n][i] = series[i].coeff(static_cast<int>(n) * D8).constant_term();
    }
  }
  Matrix inv;
  std::size_t bad = 0;
  if (d > 0 && !invert(m, inv, bad)) {
    res.singular = true;
    res.message = "leading " + std::to_string(d) + "x" + std::to_string(d) +
                  " system is singular at column " + std::to_string(bad);
    res.residual = F.with_order_cap(N * D8);
    return res;
  }

  // Gather every monomial in the leading coefficients and solve per monomial.
  std::vector<GradedElement> leading;
  for (std::size_t n = 0; n < d; ++n) leading.push_back(F.coeff(static_cast<int>(n) * D8));
  std::map<Monomial, int> monos;
  for (const auto& c : leading) {
    for (const auto& t : c.terms()) monos.emplace(t.mono, t.degree);
  }
  std::vector<TermAccumulator> acc;
  for (std::size_t i = 0; i < d; ++i) acc.emplace_back(F.table(), F.degree_cap());
  for (const auto& [mono, deg] : monos) {
    std::vector<Rational> f(d);
    for (std::size_t n = 0; n < d; ++n) f[n] = leading[n].coefficient(mono);
    for (std::size_t i = 0; i < d; ++i) {
      Rational l = 0;
      for (std::size_t n = 0; n < d; ++n) l += inv[i][n] * f[n];
      acc[i].add_term(mono, deg, l);
    }
  }
  QSeries fit(F.table(), F.degree_cap(), N * D8);
  for (std::size_t i = 0; i < d; ++i) {
    res.lambdas.push_back(acc[i].finish());
    fit += series[i] * res.lambdas.back();
  }
  res.residual = F.with_order_cap(N * D8) - fit;
  res.residual_zero = res.residual.is_zero();
  if (!res.residual_zero) {
    res.first_failing_order = res.residual.valuation() / D8;
    res.message = "residual nonzero at q^" + std::to_string(*res.first_failing_order);
  }
  return res;
}

std::vector<std::pair<int, bool>> infer_weight(const QSeries& F, const std::vector<int>& candidates,
                                               int N) {
  std::vector<std::pair<int, bool>> out;
  for (int w : candidates) {
    if (w < 0 || w % 2 != 0) {
      out.emplace_back(w, false);
      continue;
    }
    out.emplace_back(w, decompose(F, w, N).residual_zero);
  }
  return out;
}

}  // namespace egv
