// egv: command-line front end for the verification engine.
#include <chrono>
#include <fstream>
#include <iostream>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "egv/e8/e8.hpp"
#include "egv/errors.hpp"
#include "egv/theta/numeric.hpp"
#include "egv/theta/theta.hpp"
#include "egv/verifier/report_json.hpp"
#include "egv/verifier/verifier.hpp"

namespace {

using namespace egv;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Shared {
  std::string json_path;
  std::optional<int> q_order;
  std::optional<int> degree_cap;
  std::optional<int> e8_vars;
};

void add_shared(CLI::App* cmd, Shared& s) {
  cmd->add_option("--json", s.json_path, "Write a JSON report to PATH ('-' for stdout)");
  cmd->add_option("--q-order", s.q_order, "Truncation order in whole powers of q")->check(CLI::Range(1, 12));
  cmd->add_option("--degree-cap", s.degree_cap, "Degree cap of the graded algebra")->check(CLI::Range(0, 40));
  cmd->add_option("--e8-vars", s.e8_vars, "Active E8 variables per factor")->check(CLI::IsMember({4, 8}));
}

void emit_json(const std::string& path, const std::string& text) {
  if (path.empty()) return;
  if (path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text << "\n";
}

SuiteOptions options_of(const Shared& s) { return {s.q_order, s.degree_cap, s.e8_vars}; }

void print_case(const VerificationReport& r) {
  std::cout << (r.passed() ? "PASS " : "FAIL ") << r.spec.id << "  " << to_string(r.spec.family) << " "
            << to_string(r.spec.gauge) << " dim " << r.spec.dim << "  weight " << r.weight
            << "  residual " << (r.residual_zero ? "zero" : "NONZERO") << "  (" << r.elapsed_ms << " ms)\n";
  for (const auto& row : r.identity_table) {
    std::cout << "    q^" << row.q << "  " << row.paper_coefficient << "  "
              << (row.matched ? "matched" : (row.erratum ? "erratum" : "MISMATCH"));
    if (!row.note.empty()) std::cout << "  [" << row.note << "]";
    std::cout << "\n";
  }
  for (const auto& c : r.controls) {
    std::cout << "    control " << c.name << ": "
              << (c.applicable ? (c.broke ? "breaks residual" : "DOES NOT break residual") : "not applicable") << "\n";
  }
  for (const auto& n : r.notes) std::cout << "    note: " << n << "\n";
}

void print_check(const CheckResult& c) {
  std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  (" << c.elapsed_ms << " ms)\n    " << c.detail << "\n";
}

int run_suite_cmd(const std::string& profile, const Shared& s) {
  SuiteReport rep = run_suite(profile, options_of(s));
  for (const auto& c : rep.checks) print_check(c);
  for (const auto& c : rep.cases) print_case(c);
  std::cout << (rep.passed ? "suite " + profile + ": all passed\n" : "suite " + profile + ": FAILURES\n");
  emit_json(s.json_path, to_json(rep));
  return rep.passed ? kExitPass : kExitFail;
}

int run_theorem_cmd(const std::string& id, const Shared& s) {
  if (id == "AGW" || id == "agw") {
    AgwReport a = agw_check(6, 12);
    CheckResult c{a.report.name, a.report.passed, "", 0};
    for (const auto& d : a.report.details) c.detail += (c.detail.empty() ? "" : "; ") + d;
    print_check(c);
    nlohmann::json j = {{"case", "AGW"},
                        {"passed", a.report.passed},
                        {"literal_holds", a.literal_holds},
                        {"standard_holds", a.standard_holds},
                        {"notes", a.report.details}};
    emit_json(s.json_path, j.dump(2));
    return a.report.passed ? kExitPass : kExitFail;
  }
  CaseSpec c = apply_options(case_by_id(id), options_of(s));
  VerificationReport r = verify_theorem(c);
  print_case(r);
  emit_json(s.json_path, to_json(r));
  return r.passed() ? kExitPass : kExitFail;
}

TablePtr numbered_table(const std::vector<std::string>& prefixes, int count) {
  VariableTable::Builder b;
  for (const auto& p : prefixes) {
    for (int i = 1; i <= count; ++i) b.add_even(p + std::to_string(i));
  }
  return b.build();
}

std::string exponent_label(int exp8) {
  const int g = std::gcd(exp8, QSeries::kDenom);
  if (exp8 % QSeries::kDenom == 0) return std::to_string(exp8 / QSeries::kDenom);
  return std::to_string(exp8 / g) + "/" + std::to_string(QSeries::kDenom / g);
}

QSeries expand_object(const std::string& object, int N, int D, int e8_vars) {
  if (object == "theta1" || object == "theta2" || object == "theta3") {
    TablePtr t = VariableTable::Builder{}.add_even("w").build();
    ThetaKind k = object == "theta1" ? ThetaKind::kTheta1 : object == "theta2" ? ThetaKind::kTheta2 : ThetaKind::kTheta3;
    return theta_expansion(k, GradedElement::variable(t, D, "w"), N);
  }
  if (object == "qE") {
    TablePtr t = numbered_table({"e"}, 4);
    RootBundle e = RootBundle::real_from_variables(t, D, {"e1", "e2", "e3", "e4"});
    return bundle_series({BundleSeriesKind::kQE, std::nullopt, e, std::nullopt}, N);
  }
  if (object == "thetaV") {
    TablePtr t = numbered_table({"y"}, e8_vars);
    return theta_V(e8_forms(t, D, "y", e8_vars), N);
  }
  if (object == "thetaVpair") {
    TablePtr t = numbered_table({"y", "z"}, e8_vars);
    return theta_V_pair(e8_forms(t, D, "y", e8_vars), e8_forms(t, D, "z", e8_vars), N);
  }
  if (object.rfind("eisenstein:", 0) == 0) {
    int k = 0;
    try {
      k = std::stoi(object.substr(11));
    } catch (const std::exception&) {
      throw UsageError("eisenstein:k needs an integer k");
    }
    return eisenstein(k, N);
  }
  if (object.rfind("case:", 0) == 0) {
    CaseSpec c = case_by_id(object.substr(5));
    c.q_order = N;
    AssembledCase a = assemble(c);
    return impose_spin_c_relation(a.top, c.family);
  }
  throw UsageError("unknown object '" + object + "'");
}

int run_expand_cmd(const std::string& object, const Shared& s) {
  const int N = s.q_order.value_or(3);
  const int D = s.degree_cap.value_or(8);
  QSeries f = expand_object(object, N, D, s.e8_vars.value_or(8));
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& [e, c] : f.coeffs()) {
    std::cout << "q^" << exponent_label(e) << ": " << c.to_string() << "\n";
    coeffs.push_back({{"q", exponent_label(e)}, {"value", c.to_string()}});
  }
  std::cout << "(through q^" << exponent_label(f.order_cap()) << ", degree cap " << f.degree_cap() << ")\n";
  emit_json(s.json_path, nlohmann::json{{"object", object}, {"q_order", N}, {"degree_cap", D}, {"coefficients", coeffs}}
                             .dump(2));
  return kExitPass;
}

cplx parse_complex(const std::string& text) {
  static const std::regex full(R"(^\s*([+-]?[0-9.]+(?:[eE][+-]?[0-9]+)?)\s*([+-])\s*([0-9.]*(?:[eE][+-]?[0-9]+)?)\s*[ij]\s*$)");
  static const std::regex imag(R"(^\s*([+-]?[0-9.]*(?:[eE][+-]?[0-9]+)?)\s*[ij]\s*$)");
  static const std::regex real(R"(^\s*([+-]?[0-9.]+(?:[eE][+-]?[0-9]+)?)\s*$)");
  auto num = [](const std::string& s, double empty) { return s.empty() || s == "+" ? empty : s == "-" ? -empty : std::stod(s); };
  std::smatch m;
  try {
    if (std::regex_match(text, m, full)) {
      double im = num(m[3].str(), 1.0);
      return {std::stod(m[1].str()), m[2].str() == "-" ? -im : im};
    }
    if (std::regex_match(text, m, imag)) return {0.0, num(m[1].str(), 1.0)};
    if (std::regex_match(text, m, real)) return {std::stod(m[1].str()), 0.0};
  } catch (const std::exception&) {
  }
  throw UsageError("cannot parse complex number '" + text + "' (expected RE+IMi)");
}

int run_numeric_cmd(const std::string& check, const std::string& tau_s, const std::string& v_s, int terms,
                    double tol, const std::string& json_path) {
  if (check != "theta-laws") throw UsageError("unknown numeric check '" + check + "'");
  cplx tau = parse_complex(tau_s);
  cplx v = parse_complex(v_s);
  if (tau.imag() <= 0) throw UsageError("tau must lie in the upper half-plane");
  LawReport rep = numeric_transformation_check(tau, v, terms, tol);
  nlohmann::json laws = nlohmann::json::array();
  for (const auto& l : rep.laws) {
    std::cout << (l.passed ? "ok   " : "FAIL ") << l.name << "  deviation " << l.deviation << "\n";
    laws.push_back({{"name", l.name}, {"deviation", l.deviation}, {"passed", l.passed}});
  }
  for (const auto& d : rep.diagnostics) std::cout << "diagnostic: " << d << "\n";
  std::cout << "max deviation " << rep.max_deviation << ", tail estimate " << rep.tail_estimate << ", tolerance "
            << tol << ": " << (rep.passed ? "passed" : "FAILED") << "\n";
  emit_json(json_path, nlohmann::json{{"tau", tau_s},
                                      {"v", v_s},
                                      {"terms", terms},
                                      {"tol", tol},
                                      {"max_deviation", rep.max_deviation},
                                      {"tail_estimate", rep.tail_estimate},
                                      {"laws", laws},
                                      {"diagnostics", rep.diagnostics},
                                      {"passed", rep.passed}}
                           .dump(2));
  return rep.passed ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of E8 anomaly cancellation identities"};
  app.require_subcommand(1);

  Shared suite_s, theorem_s, expand_s;
  std::string profile = "quick";
  auto* suite = app.add_subcommand("suite", "Run a verification profile");
  suite->add_option("--profile", profile, "quick, full or deep")->check(CLI::IsMember({"quick", "full", "deep"}));
  add_shared(suite, suite_s);

  std::string id;
  auto* theorem = app.add_subcommand("theorem", "Verify one theorem case");
  theorem->add_option("--id", id, "Case id such as T3.3, T4.4, X9 or AGW")->required();
  add_shared(theorem, theorem_s);

  std::string object;
  auto* expand = app.add_subcommand("expand", "Print q-coefficients of an object");
  expand->add_option("--object", object, "theta1|theta2|theta3|qE|thetaV|thetaVpair|eisenstein:k|case:<id>")
      ->required();
  add_shared(expand, expand_s);

  std::string check = "theta-laws", tau = "0.25+1.3i", v = "0.31+0.04i", numeric_json;
  int terms = 40;
  double tol = 1e-9;
  auto* numeric = app.add_subcommand("numeric", "Floating-point transformation-law checks");
  numeric->add_option("--check", check, "theta-laws");
  numeric->add_option("--tau", tau, "RE+IMi with IM > 0");
  numeric->add_option("--v", v, "RE+IMi");
  numeric->add_option("--terms", terms, "Product factors")->check(CLI::Range(1, 10000));
  numeric->add_option("--tol", tol, "Tolerance")->check(CLI::PositiveNumber);
  numeric->add_option("--json", numeric_json, "Write a JSON report to PATH ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*suite) return run_suite_cmd(profile, suite_s);
    if (*theorem) return run_theorem_cmd(id, theorem_s);
    if (*expand) return run_expand_cmd(object, expand_s);
    if (*numeric) return run_numeric_cmd(check, tau, v, terms, tol, numeric_json);
  } catch (const UsageError& e) {
    std::cerr << "egv: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "egv: error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
