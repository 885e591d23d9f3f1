#include "covforms/cli/suites.hpp"
#include "covforms/error.hpp"
#include "doctest.h"

using namespace covforms;
using namespace covforms::cli;
using nlohmann::json;

TEST_CASE("resource guard refuses large dimensions") {
  SuiteOptions o;
  o.n = 9;
  CHECK_THROWS_AS(build_suite("main", o), ResourceGuardError);
  o.n = 3;
  CHECK_NOTHROW(build_suite("main", o));
  o.term_cap = 100;
  CHECK_THROWS_AS(build_suite("exterior", o), ResourceGuardError);
  CHECK_THROWS_AS(build_suite("nonsense", SuiteOptions{}), std::invalid_argument);
  CHECK(projected_terms(9) > kDefaultTermCap);
  CHECK(projected_terms(6) < kDefaultTermCap);
}

TEST_CASE("suite composition") {
  SuiteOptions o;
  o.n = 2;
  std::size_t total = 0;
  for (const auto& name : {"exterior", "riesz", "main", "conformal", "bidiff"}) {
    auto cases = build_suite(name, o);
    CHECK_FALSE(cases.empty());
    for (const auto& c : cases) CHECK(c.suite == name);
    total += cases.size();
  }
  CHECK(build_suite("all", o).size() == total);
}

TEST_CASE("worker pool keeps order and contains exceptions") {
  std::vector<SuiteCase> cases;
  for (int i = 0; i < 7; ++i) {
    cases.push_back({"t", "case " + std::to_string(i), i, -1, -1, -1, [i] {
                       if (i == 3) throw DegreeError("boom");
                       Report r{"r" + std::to_string(i), {}};
                       r.add("ok", true);
                       return r;
                     }});
  }
  auto res = run_cases(cases, 3);
  REQUIRE(res.size() == 7);
  for (int i = 0; i < 7; ++i) {
    CHECK(res[i].info.n == i);
    CHECK(res[i].pass() == (i != 3));
  }
  CHECK(res[3].report.checks.front().detail.find("boom") != std::string::npos);
}

TEST_CASE("report JSON round trips and isolates run_info") {
  SuiteOptions o;
  o.n = 1;
  SuiteReport r;
  r.suite = "bidiff";
  r.options = o;
  r.timestamp = "2026-01-01T00:00:00Z";
  r.jobs = 2;
  r.cases = run_cases(build_suite("bidiff", o), 2);
  json j = to_json(r);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["pass"] == true);
  SuiteReport back = report_from_json(j);
  CHECK(to_json(back) == j);

  SuiteReport later = r;
  later.timestamp = "2027-01-01T00:00:00Z";
  later.jobs = 1;
  for (auto& c : later.cases) c.wall_ms += 5;
  CHECK(to_json(later) != j);
  CHECK(deterministic_part(to_json(later)).dump() == deterministic_part(j).dump());
}

TEST_CASE("form JSON") {
  // 3 x1^2 e2 ^ e1 = -3 x1^2 e12
  json in = json::parse(R"({"n": 2, "degree": 2, "terms": [{"coeff": "3", "x": [2], "basis": [2, 1]}]})");
  weyl::PolyForm f = form_from_json(in, lm_names());
  weyl::Exps e{};
  e[0] = 2;
  CHECK(f == weyl::PolyForm::monomial(2, weyl::VarSet::X, weyl::Bideg{2, 0}, e, weyl::Exps{}, 3, 0, ParamScalar(-3)));
  CHECK(form_from_json(form_to_json(f, lm_names()), lm_names()) == f);
  json lam = json::parse(R"({"n": 1, "degree": 0, "terms": [{"coeff": "lambda + 1/2", "x": [1]}]})");
  CHECK_FALSE(form_from_json(lam, lm_names()).coeff(weyl::FormKey{{1}, {}, 0, 0}).is_constant());
  CHECK_THROWS(form_from_json(json::parse(R"({"n": 1, "degree": 1, "terms": [{"coeff": "1", "basis": [2]}]})"), lm_names()));
}
