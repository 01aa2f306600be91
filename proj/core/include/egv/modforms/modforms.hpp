#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "egv/kernel/qseries.hpp"

namespace egv {

/// A table with no variables, for purely numeric q-series.
TablePtr scalar_table();

/// σ_k(n) by divisor enumeration.
Integer divisor_sigma(unsigned k, unsigned n);

/// E_k for k ∈ {2,4,6}: 1 − (2k/B_k) Σ σ_{k−1}(n) qⁿ through qᴺ.
QSeries eisenstein(int k, int N, TablePtr table, int degree_cap);
QSeries eisenstein(int k, int N);

struct EisensteinBasis {
  int weight = 0;
  std::vector<std::pair<int, int>> monomials;  // (a, b) for E4^a E6^b
  std::vector<QSeries> series;
  std::size_t dim() const { return monomials.size(); }
  std::string label(std::size_t i) const;
};

/// All E4^a E6^b with 4a + 6b = weight, ordered by decreasing a.
EisensteinBasis basis(int weight, int N, TablePtr table, int degree_cap);
EisensteinBasis basis(int weight, int N);

/// Dimension of M_k(SL(2,Z)); 0 for odd or negative k.
int modular_dimension(int weight);

struct DecompositionResult {
  int weight = 0;
  std::vector<GradedElement> lambdas;
  std::vector<std::string> basis_labels;
  bool residual_zero = false;
  bool singular = false;
  int checked_from = 0;
  int checked_to = 0;  // whole powers of q
  QSeries residual;
  std::optional<int> first_failing_order;
  std::string message;
};

/// Solves the first dim coefficients of F for λ's (per monomial, over Q),
/// subtracts Σλ_i·basis_i and checks that the residual vanishes through qᴺ.
/// Weight 0 uses the constant basis {1}; weight 2 has an empty basis.
DecompositionResult decompose(const QSeries& F, int weight, int N);

/// decompose() for every candidate weight.
std::vector<std::pair<int, bool>> infer_weight(const QSeries& F, const std::vector<int>& candidates,
                                               int N);

}  // namespace egv
