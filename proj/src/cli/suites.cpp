#include "covforms/cli/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <thread>

#include "covforms/bidiff/bidiff.hpp"
#include "covforms/conformal/conformal.hpp"
#include "covforms/error.hpp"
#include "covforms/exterior/exterior.hpp"
#include "covforms/riesz/oracle.hpp"
#include "covforms/riesz/symbol.hpp"
#include "covforms/source/source.hpp"
#include "covforms/weylops/algebra.hpp"

namespace covforms::cli {

using nlohmann::json;
using weyl::Bideg;
using weyl::PolyForm;
using weyl::VarSet;

bool SuiteReport::pass() const { return failed() == 0; }

std::size_t SuiteReport::failed() const {
  return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return !c.pass(); }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"exterior", "riesz", "main", "conformal", "bidiff", "all"};
  return names;
}

double projected_terms(int n) {
  double mono = 1;
  for (int i = 1; i <= 4; ++i) mono = mono * (4.0 * n + i) / i;  // C(4n + 4, 4)
  double block = 1;
  for (int i = 1; i <= n / 2; ++i) block = block * (n - n / 2 + i) / i;  // C(n, n/2)
  return mono * block * block;
}

namespace {

std::string fmt_err(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

Report oracle_report(int n, int k, double s) {
  riesz::OracleResult res = riesz::fourier_oracle(n, k, s);
  double tol = k == 0 ? 1e-8 : 1e-6;
  Report r{"Fourier oracle", {}};
  r.add("relative pairing discrepancy <= " + fmt_err(tol), res.max_rel_err <= tol,
        "max relative error " + fmt_err(res.max_rel_err) + " over " + std::to_string(res.trials) + " test forms" +
            (res.delta_limit ? " (boundary limit)" : ""));
  r.add("quadrature converged", res.converged);
  return r;
}

Report e00_report(int n) {
  Report r{"E on functions", {}};
  bool ok = source::build_E00_closed(n) == source::build_E_derived(n, 0, 0);
  r.add("E(n,0,0) equals the closed scalar form", ok);
  return r;
}

void add_exterior(std::vector<SuiteCase>& out, const SuiteOptions& o) {
  for (int n = 1; n <= o.n; ++n) {
    std::uint64_t seed = o.seed;
    out.push_back({"exterior", "random relations", n, -1, -1, -1,
                   [n, seed] { return exterior::verify_exterior_relations(n, 100, seed); }});
    out.push_back({"exterior", "symbolic relations", n, -1, -1, -1, [n] { return weyl::verify_symbolic_exterior(n); }});
    out.push_back({"exterior", "Cartan relations", n, -1, -1, -1, [n] { return weyl::verify_cartan_relations(n); }});
  }
}

void add_riesz(std::vector<SuiteCase>& out, const SuiteOptions& o) {
  for (int n = 1; n <= o.n; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::uint64_t seed = o.seed;
      out.push_back({"riesz", "shift identities", n, k, -1, -1,
                     [n, k, seed] { return riesz::verify_shift_identities(n, k, seed); }});
      out.push_back({"riesz", "Knapp-Stein inverse", n, k, -1, -1, [n, k] { return riesz::verify_ks_inverse(n, k); }});
    }
  }
  for (auto [n, k] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{2, 1}}) {
    if (n > o.n) continue;
    for (double s : {-0.5, -1.0}) {
      out.push_back({"riesz", "Fourier oracle s=" + std::to_string(s).substr(0, 4), n, k, -1, -1,
                     [n, k, s] { return oracle_report(n, k, s); }});
    }
  }
}

void add_main(std::vector<SuiteCase>& out, const SuiteOptions& o) {
  for (int n = 1; n <= o.n; ++n) {
    out.push_back({"main", "lemma identities", n, -1, -1, -1, [n] { return source::verify_lemma_ident(n); }});
    out.push_back({"main", "nabla forms", n, -1, -1, -1, [n] { return source::verify_nabla_forms(n); }});
    out.push_back({"main", "E closed form", n, 0, 0, -1, [n] { return e00_report(n); }});
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) {
        int deg = o.max_degree;
        out.push_back({"main", "D identity", n, k, l, -1, [n, k, l, deg] { return source::verify_main1(n, k, l, deg, n <= 3); }});
        out.push_back({"main", "E derivation and normal form", n, k, l, -1,
                       [n, k, l] { return source::verify_main2_and_normal(n, k, l); }});
        out.push_back({"main", "swap symmetry", n, k, l, -1, [n, k, l] { return source::verify_swap_symmetry(n, k, l); }});
        out.push_back({"main", "F display", n, k, l, -1, [n, k, l] { return source::compare_F(n, k, l); }});
        out.push_back({"main", "kappa", n, k, l, -1, [n, k, l] { return source::verify_kappa(n, k, l); }});
      }
    }
  }
}

void add_conformal(std::vector<SuiteCase>& out, const SuiteOptions& o) {
  for (int n = 1; n <= o.n; ++n) {
    std::uint64_t seed = o.seed;
    out.push_back({"conformal", "random group instances", n, -1, -1, -1,
                   [n, seed] { return conformal::verify_group_random(n, 100, seed); }});
    for (int k = 0; k <= n; ++k) {
      out.push_back({"conformal", "certify dpi", n, k, -1, -1, [n, k] { return conformal::certify_dpi(n, k); }});
    }
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) {
        out.push_back({"conformal", "F covariance", n, k, l, 1,
                       [n, k, l] { return conformal::verify_F_covariance(n, k, l, 1); }});
      }
    }
  }
}

void add_bidiff(std::vector<SuiteCase>& out, const SuiteOptions& o) {
  for (int n = 1; n <= o.n; ++n) {
    out.push_back({"bidiff", "Cartan projection", n, -1, -1, -1, [n] { return bidiff::verify_projection(n); }});
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; k + l <= n; ++l) {
        out.push_back({"bidiff", "three-block formula", n, k, l, 1, [n, k, l] { return bidiff::verify_dernier(n, k, l); }});
        if (n <= 2) {
          out.push_back({"bidiff", "B covariance", n, k, l, 1, [n, k, l] { return bidiff::verify_B_covariance(n, k, l, 1); }});
        }
      }
    }
    out.push_back({"bidiff", "scalar case", n, 0, 0, 1, [n] { return bidiff::verify_rankin_cohen(n); }});
  }
}

}  // namespace

std::vector<SuiteCase> build_suite(const std::string& name, const SuiteOptions& opts) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  if (opts.n < 1) throw std::invalid_argument("--n must be at least 1");
  double projected = projected_terms(opts.n);
  if (projected > opts.term_cap) {
    std::ostringstream os;
    os << "resource guard: projected term count " << std::setprecision(3) << projected << " for n=" << opts.n
       << " exceeds the cap " << opts.term_cap;
    throw ResourceGuardError(os.str());
  }
  if (opts.n > weyl::kMaxDim) throw std::invalid_argument("--n exceeds the largest supported dimension");
  std::vector<SuiteCase> out;
  bool all = name == "all";
  if (all || name == "exterior") add_exterior(out, opts);
  if (all || name == "riesz") add_riesz(out, opts);
  if (all || name == "main") add_main(out, opts);
  if (all || name == "conformal") add_conformal(out, opts);
  if (all || name == "bidiff") add_bidiff(out, opts);
  return out;
}

std::vector<CaseResult> run_cases(const std::vector<SuiteCase>& cases, int jobs) {
  std::vector<CaseResult> results(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      auto t0 = std::chrono::steady_clock::now();
      Report r;
      try {
        r = cases[i].run();
      } catch (const std::exception& e) {
        r.name = cases[i].label;
        r.add("case completed", false, std::string("exception: ") + e.what());
      }
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      results[i] = CaseResult{cases[i], std::move(r), ms};
    }
  };
  int workers = std::max(1, std::min<int>(jobs, static_cast<int>(cases.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

namespace {

json index_or_null(int v) { return v < 0 ? json(nullptr) : json(v); }
int index_from(const json& j) { return j.is_null() ? -1 : j.get<int>(); }

}  // namespace

json to_json(const SuiteReport& r) {
  json cases = json::array();
  json wall = json::array();
  for (const auto& c : r.cases) {
    json checks = json::array();
    for (const auto& ch : c.report.checks) checks.push_back({{"label", ch.label}, {"pass", ch.pass}, {"detail", ch.detail}});
    cases.push_back({{"suite", c.info.suite},
                     {"case", c.info.label},
                     {"report", c.report.name},
                     {"n", index_or_null(c.info.n)},
                     {"k", index_or_null(c.info.k)},
                     {"l", index_or_null(c.info.l)},
                     {"m", index_or_null(c.info.m)},
                     {"pass", c.pass()},
                     {"checks", std::move(checks)}});
    wall.push_back(std::round(c.wall_ms * 1000) / 1000);
  }
  json out;
  out["schema_version"] = kReportSchemaVersion;
  out["suite"] = r.suite;
  out["options"] = {{"n", r.options.n}, {"max_degree", r.options.max_degree}, {"seed", r.options.seed},
                    {"term_cap", r.options.term_cap}};
  out["pass"] = r.pass();
  out["summary"] = {{"cases", r.cases.size()}, {"failed", r.failed()}};
  out["cases"] = std::move(cases);
  out["run_info"] = {{"timestamp", r.timestamp}, {"jobs", r.jobs}, {"wall_ms", std::move(wall)}};
  return out;
}

SuiteReport report_from_json(const json& j) {
  if (j.at("schema_version").get<int>() != kReportSchemaVersion) throw std::invalid_argument("unsupported report schema");
  SuiteReport r;
  r.suite = j.at("suite").get<std::string>();
  const json& o = j.at("options");
  r.options.n = o.at("n").get<int>();
  r.options.max_degree = o.at("max_degree").get<int>();
  r.options.seed = o.at("seed").get<std::uint64_t>();
  r.options.term_cap = o.at("term_cap").get<double>();
  const json& info = j.at("run_info");
  r.timestamp = info.at("timestamp").get<std::string>();
  r.jobs = info.at("jobs").get<int>();
  const json& wall = info.at("wall_ms");
  std::size_t i = 0;
  for (const auto& c : j.at("cases")) {
    CaseResult cr;
    cr.info.suite = c.at("suite").get<std::string>();
    cr.info.label = c.at("case").get<std::string>();
    cr.info.n = index_from(c.at("n"));
    cr.info.k = index_from(c.at("k"));
    cr.info.l = index_from(c.at("l"));
    cr.info.m = index_from(c.at("m"));
    cr.report.name = c.at("report").get<std::string>();
    for (const auto& ch : c.at("checks")) {
      cr.report.add(ch.at("label").get<std::string>(), ch.at("pass").get<bool>(), ch.at("detail").get<std::string>());
    }
    cr.wall_ms = i < wall.size() ? wall[i].get<double>() : 0.0;
    ++i;
    r.cases.push_back(std::move(cr));
  }
  return r;
}

json deterministic_part(const json& report) {
  json out = report;
  out.erase("run_info");
  return out;
}

namespace {

json exps_json(const weyl::Exps& e, int n) {
  json a = json::array();
  for (int j = 0; j < n; ++j) a.push_back(int(e[j]));
  return a;
}

json mask_json(exterior::Mask m) {
  json a = json::array();
  for (int j = 0; j < 16; ++j) {
    if (m >> j & 1u) a.push_back(j + 1);
  }
  return a;
}

weyl::Exps exps_from(const json& a, int n) {
  if (!a.is_array() || static_cast<int>(a.size()) > n) throw std::invalid_argument("exponent list longer than n");
  weyl::Exps e{};
  for (std::size_t j = 0; j < a.size(); ++j) {
    int v = a[j].get<int>();
    if (v < 0 || v > 255) throw std::invalid_argument("exponent out of range");
    e[j] = static_cast<std::uint8_t>(v);
  }
  return e;
}

exterior::Mask mask_from(const json& a, int n) {
  exterior::Mask m = 0;
  for (const auto& v : a) {
    int idx = v.get<int>();
    if (idx < 1 || idx > n) throw std::invalid_argument("basis index outside 1..n");
    if (m >> (idx - 1) & 1u) throw std::invalid_argument("repeated basis index");
    m |= exterior::Mask{1} << (idx - 1);
  }
  return m;
}

// Sign that sorts a list of distinct basis indices into increasing order.
int sort_sign(const json& a) {
  std::vector<int> v;
  for (const auto& x : a) v.push_back(x.get<int>());
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] > v[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

json form_to_json(const PolyForm& f, const ParamNames& names) {
  json terms = json::array();
  const int n = f.dim();
  bool xy = f.vars() == VarSet::XY;
  for (const auto& [k, c] : f.terms()) {
    json t{{"coeff", c.to_string(names)}, {"x", exps_json(k.x, n)}, {"basis", mask_json(k.xm)}};
    if (xy) t["y"] = exps_json(k.y, n);
    if (f.deg().l > 0) t["basis_y"] = mask_json(k.ym);
    terms.push_back(std::move(t));
  }
  return {{"schema_version", kReportSchemaVersion},
          {"n", n},
          {"vars", xy ? "xy" : "x"},
          {"degree", {f.deg().k, f.deg().l}},
          {"params", {names[0], names[1]}},
          {"terms", std::move(terms)}};
}

PolyForm form_from_json(const json& j, const ParamNames& names) {
  int n = j.at("n").get<int>();
  Bideg deg{};
  const json& d = j.at("degree");
  if (d.is_array()) {
    deg = Bideg{d.at(0).get<int>(), d.size() > 1 ? d.at(1).get<int>() : 0};
  } else {
    deg = Bideg{d.get<int>(), 0};
  }
  VarSet vars = j.value("vars", std::string("x")) == "xy" ? VarSet::XY : VarSet::X;
  PolyForm f(n, vars, deg);
  for (const auto& t : j.at("terms")) {
    weyl::FormKey key;
    key.x = exps_from(t.value("x", json::array()), n);
    key.y = exps_from(t.value("y", json::array()), n);
    const json bx = t.value("basis", json::array()), by = t.value("basis_y", json::array());
    key.xm = static_cast<std::uint16_t>(mask_from(bx, n));
    key.ym = static_cast<std::uint16_t>(mask_from(by, n));
    ParamScalar c;
    const json& cj = t.at("coeff");
    if (cj.is_number_integer()) {
      c = ParamScalar(cj.get<long long>());
    } else {
      c = ParamScalar(ParamPoly::parse(cj.get<std::string>(), names));
    }
    f.add_term(key, c.scaled(GaussRat(sort_sign(bx) * sort_sign(by))));
  }
  return f;
}

}  // namespace covforms::cli
