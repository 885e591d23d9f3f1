// Acceptance run: one PASS/FAIL line per criterion, with wall time against
// the criterion's budget. Exit status 0 only when every selected criterion
// passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <unistd.h>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "covforms/bidiff/bidiff.hpp"
#include "covforms/cli/suites.hpp"
#include "covforms/conformal/conformal.hpp"
#include "covforms/exterior/exterior.hpp"
#include "covforms/riesz/oracle.hpp"
#include "covforms/riesz/symbol.hpp"
#include "covforms/source/source.hpp"
#include "covforms/weylops/algebra.hpp"

using namespace covforms;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;     // printed under the line
  std::vector<std::string> failures;  // first few failing checks

  void absorb(const Report& r) {
    for (const auto& c : r.checks) {
      if (c.pass) continue;
      pass = false;
      if (failures.size() < 5) failures.push_back(r.name + ": " + c.label + (c.detail.empty() ? "" : " (" + c.detail.substr(0, 240) + ")"));
    }
  }
  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string summary;
  double budget_s;
  std::function<Outcome()> run;
};

std::uint64_t g_seed = cli::kDefaultSeed;

Outcome exterior_criterion() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    o.absorb(exterior::verify_exterior_relations(n, 100, g_seed));
    o.absorb(weyl::verify_symbolic_exterior(n));
    o.absorb(weyl::verify_cartan_relations(n));
  }
  return o;
}

Outcome riesz_criterion() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) {
    for (int k = 0; k <= n; ++k) o.absorb(riesz::verify_shift_identities(n, k, g_seed));
  }
  return o;
}

Outcome main1_criterion() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) o.absorb(source::verify_main1(n, k, l, 2));
    }
  }
  for (auto [k, l] : {std::pair{0, 0}, std::pair{1, 1}, std::pair{2, 2}, std::pair{1, 2}}) {
    o.absorb(source::verify_main1(4, k, l, 2, false));
  }
  o.notes.push_back("n = 4 checks the monomial forms only; the operator-form cross-check runs for n <= 3");
  return o;
}

Outcome normal_form_criterion() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) {
        weyl::DiffOp raw = source::build_E_raw(n, k, l);
        weyl::DiffOp normal = source::build_E_normal(n, k, l);
        o.require(raw == normal, "E_raw != E_normal at n=" + std::to_string(n) + " (k,l)=(" + std::to_string(k) + "," +
                                     std::to_string(l) + "): " + weyl::diff_summary(raw, normal, 2));
        o.absorb(source::verify_main2_and_normal(n, k, l));
      }
    }
    o.require(source::build_E_raw(n, 0, 0) == source::build_E00_closed(n),
              "E(n,0,0) differs from the closed scalar form at n=" + std::to_string(n));
  }
  o.notes.push_back("E_raw uses the fifth block s(s+n) kappa_{k,s} Id (x) Box_{l,t}; the printed extra kappa_{l,t} is recorded as differing");
  return o;
}

Outcome lemma_criterion() {
  Outcome o;
  for (int n = 1; n <= 4; ++n) o.absorb(source::verify_lemma_ident(n));
  return o;
}

Outcome conformal_criterion() {
  Outcome o;
  for (int n = 1; n <= 3; ++n) {
    o.absorb(conformal::verify_group_random(n, 100, g_seed));
    for (int k = 0; k <= n; ++k) o.absorb(conformal::certify_dpi(n, k));
  }
  return o;
}

Outcome covariance_criterion() {
  Outcome o;
  bool pullback_fails = false;
  auto run = [&](int n, int m) {
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; l <= n; ++l) {
        Report r = conformal::verify_F_covariance(n, k, l, m);
        o.absorb(r);
        if (!r.checks.empty() && r.checks.back().detail == "not covariant") pullback_fails = true;
      }
    }
  };
  for (int n = 1; n <= 2; ++n) {
    run(n, 1);
    run(n, 2);
  }
  run(3, 1);
  o.notes.push_back("dpi_lambda^k = (lambda - k) h_X - L_{V_X} (induced normalization)");
  if (pullback_fails) o.notes.push_back("with the plain pullback Omega^lambda L* the identity fails for k + l > 0 (recorded)");
  return o;
}

Outcome bidiff_criterion() {
  Outcome o;
  bool dernier_ok = true, oracle_ok = false;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k) {
      for (int l = 0; k + l <= n; ++l) {
        Report r = bidiff::verify_dernier(n, k, l);
        dernier_ok = dernier_ok && r.pass();
        o.absorb(r);
      }
    }
    bidiff::BiDiffOp b = bidiff::build_B(n, 0, 0, 1);
    bidiff::BiDiffOp literal = bidiff::rankin_cohen_scalar(n, bidiff::RCReading::Literal);
    o.require(literal == b, "rankin_cohen_scalar(" + std::to_string(n) + ") != build_B(" + std::to_string(n) +
                                ",0,0,1): " + weyl::diff_summary(literal.op(), b.op(), 1, lm_names()));
    bool codiff = bidiff::rankin_cohen_scalar(n, bidiff::RCReading::Codiff) == b;
    o.notes.push_back("n=" + std::to_string(n) + ": with Q(d) read as delta d the display " +
                      (codiff ? "equals" : "still differs from") + " build_B");
  }
  Report rc = bidiff::verify_rankin_cohen(1);
  for (const auto& c : rc.checks) {
    if (c.label != "literal display at (x^2, x) matches the hand expansion") continue;
    oracle_ok = c.pass;
    o.require(c.pass, "hand expansion oracle: " + c.detail);
  }
  o.notes.push_back(std::string("three-block formula for all k + l <= n <= 3: ") + (dernier_ok ? "pass" : "FAIL"));
  o.notes.push_back(std::string("hand oracle at (x^2, x), n = 1: ") + (oracle_ok ? "pass" : "FAIL"));
  o.notes.push_back("the scalar display with Q(d) = sum d_j^2 has outer blocks of the opposite sign to build_B; this clause cannot pass as stated");
  return o;
}

Outcome oracle_criterion() {
  Outcome o;
  for (auto [n, k] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{2, 1}}) {
    for (double s : {-0.5, -1.0}) {
      auto t0 = std::chrono::steady_clock::now();
      riesz::OracleResult r = riesz::fourier_oracle(n, k, s);
      double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      double tol = k == 0 ? 1e-8 : 1e-6;
      std::ostringstream os;
      os << "(n,k,s)=(" << n << "," << k << "," << s << "): rel err " << std::scientific << std::setprecision(2)
         << r.max_rel_err << std::defaultfloat << ", " << std::fixed << std::setprecision(2) << secs << " s";
      o.notes.push_back(os.str());
      o.require(r.max_rel_err <= tol && r.converged, "oracle " + os.str() + " exceeds tolerance");
      o.require(secs < 30, "oracle " + os.str() + " over 30 s");
    }
  }
  return o;
}

Outcome determinism_criterion() {
  Outcome o;
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("covforms-acceptance-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  nlohmann::json reports[2];
  for (int i = 0; i < 2; ++i) {
    fs::path out = dir / ("run" + std::to_string(i) + ".json");
    std::string cmd = std::string("\"") + COVFORMS_CLI + "\" verify --suite all --n 2 --quiet --report \"" + out.string() + "\" > /dev/null";
    int rc = std::system(cmd.c_str());
    o.require(rc == 0, "verify --suite all --n 2 exited with status " + std::to_string(rc));
    std::ifstream in(out);
    if (!in) {
      o.require(false, "report " + out.string() + " missing");
      return o;
    }
    reports[i] = nlohmann::json::parse(in);
  }
  std::string a = cli::deterministic_part(reports[0]).dump(2), b = cli::deterministic_part(reports[1]).dump(2);
  o.require(a == b, "reports differ outside run_info");
  o.notes.push_back(std::to_string(reports[0]["cases"].size()) + " cases, " + std::to_string(a.size()) +
                    " bytes compared");
  fs::remove_all(dir);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("--only", only, "Criteria to run (default: all)")->delimiter(',')->check(CLI::Range(1, 10));
  app.add_option("--seed", g_seed, "Seed for randomized checks");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "exterior relations and Lemma identities, n <= 5, symbolic and 100 random inputs", 10, exterior_criterion},
      {2, "Riesz shift identities (cleared and 12-point evaluation), n <= 4", 60, riesz_criterion},
      {3, "D identity on monomial forms of degree <= 2, n <= 3 and four n = 4 cases", 600, main1_criterion},
      {4, "E_raw = E_normal for n <= 3 and the closed scalar form", 0, normal_form_criterion},
      {5, "the four lemma identities as operator equalities, n <= 4", 0, lemma_criterion},
      {6, "conformal model on 100 random instances and certify_dpi, n <= 3", 0, conformal_criterion},
      {7, "F o dpi = dpi o F for every generator: n <= 2 with m = 1, 2 and n = 3 with m = 1", 1800, covariance_criterion},
      {8, "build_B = three-block formula, scalar display = build_B, hand oracle", 0, bidiff_criterion},
      {9, "Fourier pairing oracle, (n,k) in {(1,0),(2,0),(2,1)}, s in {-0.5,-1}", 0, oracle_criterion},
      {10, "two runs of verify --suite all --n 2 agree byte for byte outside run_info", 0, determinism_criterion},
  };
  std::set<int> selected(only.begin(), only.end());
  bool all_pass = true;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.budget_s > 0 && secs >= c.budget_s) o.require(false, "runtime over budget");
    all_pass = all_pass && o.pass;
    std::ostringstream line;
    line << "criterion " << std::setw(2) << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.summary << "  ["
         << std::fixed << std::setprecision(1) << secs << " s";
    if (c.budget_s > 0) line << ", budget " << c.budget_s << " s";
    line << "]";
    std::cout << line.str() << "\n";
    for (const auto& n : o.notes) std::cout << "      note: " << n << "\n";
    for (const auto& f : o.failures) std::cout << "      fail: " << f << "\n";
    std::cout.flush();
  }
  return all_pass ? 0 : 1;
}
