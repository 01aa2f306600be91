#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "egv/kernel/qseries.hpp"

namespace egv {

/// A virtual bundle given by Chern roots with (possibly negative)
/// multiplicities and an integer rank offset standing for trivial summands.
class RootBundle {
 public:
  struct Root {
    GradedElement root;
    int multiplicity = 1;
  };

  RootBundle() = default;
  RootBundle(TablePtr table, int degree_cap) : table_(std::move(table)), cap_(degree_cap) {}

  static RootBundle trivial(TablePtr table, int degree_cap, int rank);
  /// Real-type bundle with roots ±w for every w in `pairs`, plus `zero_roots`
  /// trivial summands.
  static RootBundle real_from_pairs(const std::vector<GradedElement>& pairs, int zero_roots = 0);
  /// Real-type bundle with roots ±(variable) for each named variable.
  static RootBundle real_from_variables(TablePtr table, int degree_cap,
                                        const std::vector<std::string>& names, int zero_roots = 0);

  RootBundle& add_root(const GradedElement& w, int multiplicity = 1);

  const TablePtr& table() const { return table_; }
  int degree_cap() const { return cap_; }
  const std::vector<Root>& roots() const { return roots_; }
  int rank_offset() const { return rank_offset_; }
  int rank() const;
  bool real_type() const { return real_type_; }
  /// Roots grouped into ± pairs (one representative per pair, with the pair
  /// multiplicity). Throws unless real-type.
  std::vector<Root> pair_representatives() const;

  /// Ẽ = E − rank(E): a rank-offset adjustment, the roots stay.
  RootBundle tilde() const;
  RootBundle dual() const;

  friend RootBundle operator+(const RootBundle& a, const RootBundle& b);
  friend RootBundle operator-(const RootBundle& a, const RootBundle& b);
  friend RootBundle operator*(int n, const RootBundle& a);
  /// Tensor product: roots add pairwise, multiplicities multiply.
  friend RootBundle tensor(const RootBundle& a, const RootBundle& b);

 private:
  void check_compatible(const RootBundle& o) const;
  void recompute_real_type();

  TablePtr table_;
  int cap_ = 0;
  std::vector<Root> roots_;
  int rank_offset_ = 0;
  bool real_type_ = true;
};

/// rank_offset + Σ m·exp(root).
GradedElement ch(const RootBundle& b);

enum class PowerOp { kLambda, kSym };

/// ch(Λ_{±q^t}(b)) = ∏(1 ± q^t e^{w})^{m} or ch(S_{q^t}(b)) = ∏(1 − q^t e^{w})^{−m},
/// with t = t_exp8/8. Negative multiplicities go through series_inv.
/// `N` is the q-order in whole powers.
QSeries power_series(PowerOp op, const RootBundle& b, int t_exp8, int sign, int N);

enum class BundleSeriesKind { kTheta1, kTheta2, kTheta3, kWitten, kQE, kThetaSpinC, kThetaSpinCStar };

struct BundleSeriesDescriptor {
  BundleSeriesKind kind;
  std::optional<RootBundle> tm;  // T_C M (Theta*, Witten, spin^c kinds)
  std::optional<RootBundle> e;   // E_C (QE)
  std::optional<RootBundle> l;   // L_R ⊗ C (spin^c kinds)
};

/// Chern character q-series of the described infinite tensor product:
///   Theta1  ⊗S_{qⁿ}(T̃)⊗Λ_{q^m}(T̃)
///   Theta2  ⊗S_{qⁿ}(T̃)⊗Λ_{−q^{m−1/2}}(T̃)
///   Theta3  ⊗S_{qⁿ}(T̃)⊗Λ_{q^{m−1/2}}(T̃)
///   Witten  ⊗S_{qⁿ}(T̃)
///   QE      Δ(E)⊗Λ_{qⁿ}(Ẽ)⊗Λ_{−q^{n−1/2}}(Ẽ)⊗Λ_{q^{n−1/2}}(Ẽ)
///   ThetaSpinC      ⊗S_{qⁿ}(T̃)⊗Λ_{q^m}(L̃)⊗Λ_{−q^{r−1/2}}(L̃)⊗Λ_{q^{s−1/2}}(L̃)
///   ThetaSpinCStar  ⊗S_{qⁿ}(T̃)⊗Λ_{−q^m}(L̃)
QSeries bundle_series(const BundleSeriesDescriptor& d, int N);

/// Â = ∏ w/(E(w/2) − E(−w/2)) over pair representatives.
GradedElement ahat(const RootBundle& tm);
/// L̂ = ∏ w(E(w/2) + E(−w/2))/(E(w/2) − E(−w/2)).
GradedElement lhat(const RootBundle& tm);
/// ch(Δ) = ∏ (E(w/2) + E(−w/2)) over pair representatives.
GradedElement spinor_ch(const RootBundle& b);

// ---------------------------------------------------------------------------
// Odd Chern character model.
//
// For the trivial bundle E with automorphism g, the transgressed character of
// a symmetric function f of the E-roots is linear in the transgressed power
// sums (products of two or more transgressed classes vanish). The class dual
// to ch_{4k}(E) = p_{2k}/(2k)! is the odd variable γ_{4k−1}.

/// Names of the odd generators: "g3", "g7", "g11", "g15", ...
std::string odd_generator_name(int degree);

struct OddModelConfig {
  int e_pairs = 4;
  /// Keeps γ_3 (i.e. drops the c3(E,g,d) = 0 hypothesis).
  bool keep_c3 = false;
};

/// Transgression of a symmetric element f of the E-pair variables `e_vars`
/// (one name per ± pair) into the γ generators of `target`. Uses the
/// multiplicity interpolation: put n of the pairs equal to one root u and the
/// rest to 0, interpolate in n and keep the n-linear part.
GradedElement transgress(const GradedElement& f, const std::vector<std::string>& e_vars,
                         const TablePtr& target, int target_cap, bool keep_c3);

/// ch_odd(Δ(E)⊗B, g, d) via transgress(); B's roots must live in the E table.
GradedElement odd_model(const RootBundle& b, const RootBundle& e, const std::vector<std::string>& e_vars,
                        const TablePtr& target, int target_cap, bool keep_c3);

/// ch(Q(E), g, d, τ) in the γ model, computed from the per-pair series
/// G(u) = 2·∏_a θ_a(u)/θ_a(0): 2^{pairs}·Σ_k a_k(τ)·(2k)!/2·γ_{4k−1} with
/// log(G/2) = Σ a_k u^{2k}. `target` must contain the needed γ variables.
QSeries odd_character_qe(const TablePtr& target, int target_cap, int N, const OddModelConfig& cfg);

/// Same quantity through the bundle route: bundle_series(QE) over explicit E
/// roots, transgressed coefficientwise.
QSeries odd_character_qe_via_bundles(const TablePtr& target, int target_cap, int N,
                                     const OddModelConfig& cfg);

// ---------------------------------------------------------------------------
// Consistency checks tying the bundle calculus to the theta calculus.

struct CheckReport {
  std::string name;
  bool passed = false;
  std::vector<std::string> details;
};

/// Â ch(Δ(M)) ch(Θ1) = ∏ witten·twist(1) and 2^{2k−1}Â ch(Θ_a) = ∏ witten·twist(a)
/// for a = 2, 3, with 2k−1 generic pairs, to order N and degree D.
CheckReport theta_quotient_crosscheck(int k, int N, int D);

/// q¹ coefficient of ch(Q(E)) equals ch(Δ(E)⊗(2Λ²Ẽ − Ẽ⊗Ẽ + Ẽ)).
CheckReport qe_first_order_check(int e_pairs, int D);

struct AgwReport {
  CheckReport report;
  int pairs = 6;
  /// Whether {L̂}^{(12)} = {Â ch(T_C M) − 32Â}^{(12)} holds as printed.
  bool literal_holds = false;
  /// Whether {L̂}^{(12)} = {8Â ch(T_C M) − 32Â}^{(12)} holds.
  bool standard_holds = false;
  /// Least-squares-free fit: the unique (a, b) with L̂ = a·Â ch + b·Â in degree
  /// 12, if the three forms are linearly dependent.
  std::optional<std::pair<Rational, Rational>> fitted;
};

/// Degree-12 gravitational anomaly cancellation check with `pairs` generic
/// pairs (6 for a 12-manifold).
AgwReport agw_check(int pairs = 6, int D = 12);

}  // namespace egv
