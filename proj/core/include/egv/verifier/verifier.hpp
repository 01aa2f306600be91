#pragma once

#include <optional>
#include <string>
#include <vector>

#include "egv/bundles/bundles.hpp"
#include "egv/modforms/modforms.hpp"

namespace egv {

enum class Family { kSpin4kMinus1, kSpinC4kMinus1, kSpinC4kPlus1 };
enum class Gauge { kE8, kE8xE8 };

std::string to_string(Family f);
std::string to_string(Gauge g);

/// Deliberate breakages used as negative controls.
struct Controls {
  bool drop_e2 = false;              // omit exp((1/24)E2·c2/30)
  bool relax_c3 = false;             // keep γ3, i.e. drop the c3 = 0 hypothesis
  bool skip_spinc_relation = false;  // leave ℓ² unreduced
};

struct CaseSpec {
  std::string id;
  Family family = Family::kSpin4kMinus1;
  Gauge gauge = Gauge::kE8;
  int dim = 7;
  int q_order = 4;
  int degree_cap = 0;  // 0 means dim
  int e8_vars = 8;
  int e_pairs = 4;
  Controls controls;
  bool extension = false;  // not stated as a theorem in the source
};

/// k with dim = 4k ± 1.
int family_k(const CaseSpec& c);
/// 2k+4 for E8, 2k+8 for E8×E8.
int expected_weight(const CaseSpec& c);
int tm_pairs(const CaseSpec& c);
/// Throws UsageError on inconsistent (family, dim), bad caps or variable counts.
void validate(const CaseSpec& c);

/// Every theorem case plus the 9-dimensional E8×E8 spin^c extension.
const std::vector<CaseSpec>& theorem_catalog();
/// Looks up "T3.3" style ids (case-insensitive). Throws UsageError.
CaseSpec case_by_id(const std::string& id);

/// The variable layout used by a case.
struct CaseLayout {
  TablePtr table;
  std::vector<std::string> tm;  // x1..
  std::optional<std::string> l;
  std::vector<std::string> y, z;
  int top_degree = 0;
  int even_cap = 0;  // largest even degree that can meet an odd generator in the top degree
};
CaseLayout make_layout(const CaseSpec& c);

struct AssembledCase {
  CaseSpec spec;
  CaseLayout layout;
  /// Everything except the odd factor, to degree even_cap.
  QSeries even;
  /// ch(Q(E), g, d, τ) in the γ model.
  QSeries odd;
  /// Degree-dim part of even·odd (before any spin^c relation).
  QSeries top;
};

AssembledCase assemble(const CaseSpec& c);

/// ℓ^{2m+ε} → s^m ℓ^ε with s = Σx²/3 (4k−1) or Σx² (4k+1).
QSeries impose_spin_c_relation(const QSeries& s, Family family);
GradedElement impose_spin_c_relation(const GradedElement& a, Family family);

struct IdentityRow {
  int q = 0;
  std::string paper_coefficient;
  bool matched = false;
  bool erratum = false;
  std::string note;
};

struct ControlOutcome {
  std::string name;
  bool applicable = false;  // changes the top-degree series
  bool broke = false;       // residual_zero became false
};

struct VerificationReport {
  CaseSpec spec;
  int weight = 0;
  std::vector<std::string> basis_labels;
  std::vector<std::string> lambdas;
  bool residual_zero = false;
  bool vacuous = false;
  std::optional<int> first_failing_order;
  std::vector<IdentityRow> identity_table;
  std::vector<ControlOutcome> controls;
  bool negative_control_failed_as_expected = false;
  std::vector<std::pair<int, bool>> weight_scan;
  long elapsed_ms = 0;
  std::vector<std::string> notes;

  bool passed() const;
};

/// Decomposition data for a top-degree series at a given weight.
struct TopAnalysis {
  DecompositionResult decomposition;
  bool vacuous = false;
};
TopAnalysis analyse_top(const QSeries& top, int weight, int N);

/// Rows comparing q-coefficients with the source's displayed numbers.
std::vector<IdentityRow> identity_table(const QSeries& top, int weight, const DecompositionResult& d);

VerificationReport verify_theorem(const CaseSpec& c, bool run_controls = true);

struct SuiteOptions {
  std::optional<int> q_order;
  std::optional<int> degree_cap;
  std::optional<int> e8_vars;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  long elapsed_ms = 0;
};

struct SuiteReport {
  std::string profile;
  std::vector<VerificationReport> cases;
  std::vector<CheckResult> checks;
  bool passed = false;
};

/// Applies the shared CLI overrides to a catalog case.
CaseSpec apply_options(CaseSpec c, const SuiteOptions& o);

/// The case ids of a profile ("quick", "full", "deep").
std::vector<std::string> profile_case_ids(const std::string& profile);

/// The non-theorem checks of the quick profile.
std::vector<CheckResult> oracle_checks();

SuiteReport run_suite(const std::string& profile, const SuiteOptions& o = {});

}  // namespace egv
