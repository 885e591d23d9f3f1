#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "covforms/report.hpp"
#include "covforms/weylops/polyform.hpp"

namespace covforms::cli {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr double kDefaultTermCap = 1e7;
inline constexpr std::uint64_t kDefaultSeed = 20240607;

// One unit of work in a suite. Unused indices are -1.
struct SuiteCase {
  std::string suite;
  std::string label;
  int n = -1, k = -1, l = -1, m = -1;
  std::function<Report()> run;
};

struct CaseResult {
  SuiteCase info;
  Report report;
  double wall_ms = 0;
  bool pass() const { return report.pass(); }
};

struct SuiteOptions {
  int n = 3;
  int max_degree = 2;
  std::uint64_t seed = kDefaultSeed;
  double term_cap = kDefaultTermCap;
};

struct SuiteReport {
  std::string suite;
  SuiteOptions options;
  std::vector<CaseResult> cases;
  std::string timestamp;
  int jobs = 1;

  bool pass() const;
  std::size_t failed() const;
};

const std::vector<std::string>& suite_names();  // exterior riesz main conformal bidiff all

// Rough upper bound on the number of operator terms a suite at dimension n
// produces: monomials of degree <= 4 in 4n variables times the largest
// Lambda^k x Lambda^l block.
double projected_terms(int n);

// Thrown when projected_terms(n) exceeds the cap.
struct ResourceGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The cases of a suite, in a fixed order. Throws ResourceGuardError or
// std::invalid_argument for an unknown suite.
std::vector<SuiteCase> build_suite(const std::string& name, const SuiteOptions& opts);

// Runs the cases on `jobs` worker threads. Results keep the case order, and an
// exception inside a case becomes a failed check.
std::vector<CaseResult> run_cases(const std::vector<SuiteCase>& cases, int jobs);

// Report serialization. Everything except the "run_info" field (timestamp,
// wall times, worker count) is deterministic.
nlohmann::json to_json(const SuiteReport& r);
SuiteReport report_from_json(const nlohmann::json& j);
// The report with run_info removed, for determinism checks.
nlohmann::json deterministic_part(const nlohmann::json& report);

// Polynomial forms as JSON:
//   {n, degree: [k, l], vars: "x" | "xy", params: [p0, p1],
//    terms: [{coeff, x: [...], y: [...], basis: [...], basis_y: [...]}]}
// Exponent lists have length n; basis lists hold 1-based indices. For a plain
// form "degree" may be a single integer and the y entries may be omitted.
nlohmann::json form_to_json(const weyl::PolyForm& f, const ParamNames& names);
weyl::PolyForm form_from_json(const nlohmann::json& j, const ParamNames& names);

}  // namespace covforms::cli
