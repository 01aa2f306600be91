#pragma once

#include <complex>
#include <string>
#include <vector>

#include "egv/theta/theta.hpp"

namespace egv {

using cplx = std::complex<double>;

/// Truncated product formulas, `terms` factors each. kTheta returns θ itself
/// (not the −√−1-normalized formal version).
cplx theta_numeric(ThetaKind kind, cplx v, cplx tau, int terms);
/// ∂θ_kind/∂v via the logarithmic derivative of the product.
cplx theta_prime_numeric(ThetaKind kind, cplx v, cplx tau, int terms);
/// E2 via the Lambert series 1 − 24 Σ n qⁿ/(1 − qⁿ).
cplx e2_numeric(cplx tau, int terms);

struct LawResult {
  std::string name;
  double deviation = 0;
  bool passed = false;
};

struct LawReport {
  cplx tau;
  cplx v;
  int terms = 0;
  double tol = 0;
  /// Rough bound on the dropped product/Lambert tail over every τ evaluated.
  double tail_estimate = 0;
  std::vector<LawResult> laws;
  std::vector<std::string> diagnostics;
  double max_deviation = 0;
  bool passed = false;
};

/// T- and S-laws for θ, θ1, θ2, θ3 and their v-derivatives, the θ′(0) S-law and
/// the E2 laws (T, S and a general SL(2,Z) element).
LawReport numeric_transformation_check(cplx tau, cplx v, int terms, double tol);

}  // namespace egv
