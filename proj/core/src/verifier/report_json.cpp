#include "egv/verifier/report_json.hpp"

#include <json.hpp>

namespace egv {

namespace {

nlohmann::json case_json(const VerificationReport& r) {
  nlohmann::json j;
  j["case"] = r.spec.id;
  j["weight"] = r.weight;
  j["lambdas"] = r.lambdas;
  j["residual_zero"] = r.residual_zero;
  auto rows = nlohmann::json::array();
  for (const auto& row : r.identity_table) {
    rows.push_back({{"q", row.q}, {"paper_coefficient", row.paper_coefficient}, {"matched", row.matched}});
  }
  j["identity_table"] = rows;
  j["negative_control_failed_as_expected"] = r.negative_control_failed_as_expected;
  j["q_order"] = r.spec.q_order;
  j["degree_cap"] = r.spec.degree_cap == 0 ? r.spec.dim : r.spec.degree_cap;
  j["elapsed_ms"] = r.elapsed_ms;
  std::vector<std::string> notes = r.notes;
  for (const auto& row : r.identity_table) {
    if (row.erratum) notes.push_back("erratum at q^" + std::to_string(row.q) + ", " + row.paper_coefficient + ": " + row.note);
  }
  for (const auto& c : r.controls) {
    notes.push_back("control " + c.name + ": " +
                    (c.applicable ? (c.broke ? "breaks the residual" : "DOES NOT break the residual")
                                  : "not applicable (top-degree series unchanged)"));
  }
  j["notes"] = notes;
  j["passed"] = r.passed();
  return j;
}

}  // namespace

std::string to_json(const VerificationReport& r, int indent) { return case_json(r).dump(indent); }

std::string to_json(const SuiteReport& r, int indent) {
  nlohmann::json j;
  j["profile"] = r.profile;
  j["cases"] = nlohmann::json::array();
  for (const auto& c : r.cases) j["cases"].push_back(case_json(c));
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"elapsed_ms", c.elapsed_ms}});
  }
  j["passed"] = r.passed;
  return j.dump(indent);
}

}  // namespace egv
