// Command-line driver: verification suites, operator emission, evaluation on
// user forms and the numeric Fourier oracle.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "covforms/bidiff/bidiff.hpp"
#include "covforms/cli/suites.hpp"
#include "covforms/error.hpp"
#include "covforms/riesz/oracle.hpp"
#include "covforms/source/source.hpp"
#include "covforms/weylops/io.hpp"

using namespace covforms;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct OperatorArgs {
  std::string name;
  int n = 1, k = 0, l = 0, m = 1;
};

const ParamNames& names_for(const std::string& op) {
  return (op == "D" || op == "E" || op == "Enormal") ? st_names() : lm_names();
}

weyl::DiffOp build_operator(const OperatorArgs& a) {
  if (a.name == "D") return source::build_D(a.n, a.k, a.l);
  if (a.name == "E") return source::build_E_derived(a.n, a.k, a.l);
  if (a.name == "Enormal") return source::build_E_normal(a.n, a.k, a.l);
  if (a.name == "F") return source::build_F_iter(a.n, a.k, a.l, a.m);
  if (a.name == "Fdisplay") return source::build_F_display(a.n, a.k, a.l);
  if (a.name == "B") return bidiff::build_B(a.n, a.k, a.l, a.m).op();
  throw std::invalid_argument("unknown operator " + a.name);
}

void add_operator_options(CLI::App* cmd, OperatorArgs& a, std::vector<std::string> allowed) {
  cmd->add_option("--operator", a.name, "Operator")->required()->check(CLI::IsMember(allowed));
  cmd->add_option("--n", a.n, "Dimension")->check(CLI::Range(1, 8));
  cmd->add_option("--k", a.k, "Degree of the first factor")->check(CLI::NonNegativeNumber);
  cmd->add_option("--l", a.l, "Degree of the second factor")->check(CLI::NonNegativeNumber);
  cmd->add_option("--m", a.m, "Iteration count (F and B)")->check(CLI::PositiveNumber);
}

std::string timestamp_now() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

json read_json_arg(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw std::invalid_argument("cannot read " + text.substr(1));
    return json::parse(in);
  }
  return json::parse(text);
}

std::string case_line(const cli::CaseResult& c) {
  std::ostringstream os;
  os << (c.pass() ? "PASS " : "FAIL ") << c.info.suite << ": " << c.info.label;
  if (c.info.n >= 0) os << " n=" << c.info.n;
  if (c.info.k >= 0 && c.info.l >= 0) os << " (k,l)=(" << c.info.k << "," << c.info.l << ")";
  else if (c.info.k >= 0) os << " k=" << c.info.k;
  if (c.info.m >= 0) os << " m=" << c.info.m;
  return os.str();
}

int run_verify(const std::string& suite, const cli::SuiteOptions& opts, int jobs, std::string report_path, bool quiet) {
  std::vector<cli::SuiteCase> cases;
  try {
    cases = cli::build_suite(suite, opts);
  } catch (const cli::ResourceGuardError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  cli::SuiteReport report;
  report.suite = suite;
  report.options = opts;
  report.jobs = jobs;
  report.timestamp = timestamp_now();
  report.cases = cli::run_cases(cases, jobs);

  for (const auto& c : report.cases) {
    if (!quiet || !c.pass()) std::cout << case_line(c) << "\n";
    if (c.pass()) continue;
    for (const auto& ch : c.report.checks) {
      if (!ch.pass) std::cout << "    " << ch.label << (ch.detail.empty() ? "" : ": " + ch.detail) << "\n";
    }
  }
  std::cout << report.cases.size() - report.failed() << "/" << report.cases.size() << " cases pass\n";

  if (report_path.empty()) {
    const char* dir = std::getenv("COVFORMS_REPORT_DIR");
    std::filesystem::path p = dir && *dir ? dir : ".";
    std::filesystem::create_directories(p);
    report_path = (p / ("verify-" + suite + "-n" + std::to_string(opts.n) + ".json")).string();
  }
  std::ofstream out(report_path);
  if (!out) {
    std::cerr << "cannot write report " << report_path << "\n";
    return kExitFail;
  }
  out << cli::to_json(report).dump(2) << "\n";
  std::cout << "report: " << report_path << "\n";
  return report.pass() ? 0 : kExitFail;
}

int run_emit(const OperatorArgs& a, const std::string& format) {
  weyl::DiffOp op = build_operator(a);
  if (format == "latex") {
    std::cout << weyl::to_latex(op, names_for(a.name)) << "\n";
  } else {
    json j = weyl::to_json(op, names_for(a.name));
    j["operator"] = a.name;
    if (a.name == "F" || a.name == "B") j["m"] = a.m;
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

ParamScalar evaluate_at(const ParamScalar& c, const std::vector<Rational>& at) {
  return ParamScalar(c.evaluate(GaussRat(at[0]), GaussRat(at[1])));
}

int run_apply(const OperatorArgs& a, const std::string& omega_text, const std::string& eta_text,
              const std::vector<std::string>& at_text) {
  const ParamNames& names = names_for(a.name);
  weyl::PolyForm omega = cli::form_from_json(read_json_arg(omega_text), names);
  weyl::PolyForm eta = cli::form_from_json(read_json_arg(eta_text), names);
  if (omega.dim() != a.n || eta.dim() != a.n) throw DimensionMismatch("form dimension differs from --n");
  if (omega.deg() != weyl::Bideg{a.k, 0} || eta.deg() != weyl::Bideg{a.l, 0}) {
    throw DegreeError("omega must be a k-form and eta an l-form");
  }
  weyl::PolyForm result = a.name == "B" ? bidiff::build_B(a.n, a.k, a.l, a.m).apply(omega, eta)
                                        : weyl::apply(build_operator(a), bidiff::tensor_forms(omega, eta));
  if (!at_text.empty()) {
    std::vector<Rational> at;
    for (const auto& s : at_text) at.push_back(Rational::parse(s));
    result = result.map_coeffs([&](const ParamScalar& c) { return evaluate_at(c, at); });
  }
  json j = cli::form_to_json(result, names);
  j["operator"] = a.name;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int run_oracle(int n, int k, double s, int trials, std::uint64_t seed) {
  riesz::OracleOptions opts;
  opts.trials = trials;
  opts.seed = seed;
  riesz::OracleResult r = riesz::fourier_oracle(n, k, s, opts);
  double tol = k == 0 ? 1e-8 : 1e-6;
  json j{{"schema_version", cli::kReportSchemaVersion},
         {"n", n},
         {"k", k},
         {"s", s},
         {"trials", r.trials},
         {"max_rel_err", r.max_rel_err},
         {"tolerance", tol},
         {"pass", r.max_rel_err <= tol && r.converged},
         {"converged", r.converged},
         {"quad_estimate", r.quad_estimate},
         {"level_errors", r.level_errors},
         {"delta_limit", r.delta_limit}};
  std::cout << j.dump(2) << "\n";
  return j["pass"].get<bool>() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covariant bi-differential operators on differential forms: verification and emission"};
  app.require_subcommand(1);

  std::string suite;
  cli::SuiteOptions vopts;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::string report_path;
  bool quiet = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite")->required()->check(CLI::IsMember(cli::suite_names()));
  verify->add_option("--n", vopts.n, "Largest dimension (default 3)")->check(CLI::PositiveNumber);
  verify->add_option("--max-degree", vopts.max_degree, "Monomial degree for the D identity")->check(CLI::Range(0, 6));
  verify->add_option("--seed", vopts.seed, "Seed for randomized checks");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--term-cap", vopts.term_cap, "Refuse runs whose projected term count exceeds this");
  verify->add_option("--report", report_path, "Report file (default $COVFORMS_REPORT_DIR/verify-<suite>-n<N>.json)");
  verify->add_flag("--quiet", quiet, "Only print failing cases");

  OperatorArgs emit_args;
  std::string format = "json";
  auto* emit = app.add_subcommand("emit", "Print an operator as JSON or LaTeX");
  add_operator_options(emit, emit_args, {"D", "E", "Enormal", "F", "Fdisplay", "B"});
  emit->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "latex"}));

  OperatorArgs apply_args;
  std::string omega_text, eta_text;
  std::vector<std::string> at_text;
  auto* apply = app.add_subcommand("apply", "Apply an operator to omega (x) eta");
  add_operator_options(apply, apply_args, {"D", "E", "F", "B"});
  apply->add_option("--omega", omega_text, "k-form as JSON, or @file")->required();
  apply->add_option("--eta", eta_text, "l-form as JSON, or @file")->required();
  apply->add_option("--at", at_text, "Rational values of the two parameters")->expected(2);

  int on = 1, ok = 0, trials = 0;
  double s = -0.5;
  std::uint64_t oseed = cli::kDefaultSeed;
  auto* oracle = app.add_subcommand("oracle", "Numeric Fourier pairing check of the Riesz symbol");
  oracle->add_option("--n", on, "Dimension")->check(CLI::Range(1, 3));
  oracle->add_option("--k", ok, "Form degree")->check(CLI::NonNegativeNumber);
  oracle->add_option("--s", s, "Exponent, -n <= s < 0")->required();
  oracle->add_option("--trials", trials, "Random test forms (0: all monomials of degree <= 2)");
  oracle->add_option("--seed", oseed, "Seed for random test forms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) return run_verify(suite, vopts, jobs, report_path, quiet);
    if (*emit) return run_emit(emit_args, format);
    if (*apply) return run_apply(apply_args, omega_text, eta_text, at_text);
    if (*oracle) return run_oracle(on, ok, s, trials, oseed);
  } catch (const json::exception& e) {
    std::cerr << "invalid JSON input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    // Requests the engine refuses (degrees out of range, k + l > n, ...).
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
