#pragma once

#include <array>
#include <string>
#include <vector>

#include "egv/kernel/qseries.hpp"

namespace egv {

struct E8RootSystem {
  std::vector<std::array<Rational, 8>> roots;
};

/// The 240 roots: ±e_k ± e_l (k < l) and (±1/2)^8 with an even number of minus signs.
E8RootSystem e8_roots();

/// Σ_α α_a α_b as an 8×8 matrix (should be 60·I).
std::array<std::array<Rational, 8>, 8> e8_gram_sum(const E8RootSystem& rs);

/// 8 + Σ_α exp(⟨α, w⟩) for the eight curvature forms `w` (zeros allowed).
GradedElement ch_adjoint(const std::vector<GradedElement>& w);

/// ½(∏θ1(w_l) + ∏θ2(w_l) + ∏θ3(w_l)) = φ(τ)⁸ ch(𝒱) through q^N.
QSeries theta_V(const std::vector<GradedElement>& w, int N);

/// chW̄ := (q² coefficient of theta_V) + 8·chW − 20.
GradedElement extract_Wbar(const QSeries& thetaV, const GradedElement& chW);

struct E8CharacterData {
  std::vector<GradedElement> w;
  GradedElement chW;
  GradedElement c2W;  // −(degree-4 part of chW) = −30 Σ w_l²
  GradedElement chWbar;
  QSeries thetaV;
};

/// Builds every piece for one E8 factor. Requires N ≥ 2 for chWbar.
E8CharacterData e8_character_data(const std::vector<GradedElement>& w, int N);

/// theta_V(w_i)·theta_V(w_j).
QSeries theta_V_pair(const std::vector<GradedElement>& wi, const std::vector<GradedElement>& wj, int N);

/// The eight curvature forms for an E8 factor: variables `prefix`1..`prefix`v
/// followed by zeros (the e8-vars specialization).
std::vector<GradedElement> e8_forms(const TablePtr& table, int degree_cap, const std::string& prefix,
                                    int active_vars);

}  // namespace egv
