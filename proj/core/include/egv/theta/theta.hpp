#pragma once

#include <string_view>

#include "egv/kernel/qseries.hpp"

namespace egv {

enum class ThetaKind { kTheta, kTheta1, kTheta2, kTheta3 };

std::string_view to_string(ThetaKind k);

// Formal arguments are curvature roots w = 2π√−1·v of degree 2. Every q-order
// argument N below is in whole powers of q.

/// φ(τ) = ∏_{n≤N}(1 − qⁿ), truncated at qᴺ.
QSeries euler_phi(TablePtr table, int degree_cap, int N);

/// Product expansion of θ_kind(v,τ). For kind == kTheta the result is
/// θ/(−√−1), which keeps every coefficient rational in w.
QSeries theta_expansion(ThetaKind kind, const GradedElement& w, int N);

/// θ′(0,τ)/π = 2q^{1/8}∏(1 − q^j)³.
QSeries theta_prime_zero_normalized(TablePtr table, int degree_cap, int N);

/// 2x·θ′(0,τ)/θ(x,τ) in the curvature normalization:
/// 2w/(E(w/2) − E(−w/2)) · ∏(1 − q^j)² / ((1 − E(w)q^j)(1 − E(−w)q^j)).
QSeries witten_factor(const GradedElement& w, int N);

/// θ_a(x,τ)/θ_a(0,τ) for a ∈ {1,2,3}.
QSeries twist_factor(int a, const GradedElement& w, int N);

/// w/(E(w/2) − E(−w/2)) = 1/sinhc with sinhc(w) = Σ w^{2m}/(4^m (2m+1)!).
GradedElement half_sinh_quotient(const GradedElement& w);
/// (E(w/2) + E(−w/2))/2, the cosh(w/2) factor.
GradedElement half_cosh(const GradedElement& w);

}  // namespace egv
