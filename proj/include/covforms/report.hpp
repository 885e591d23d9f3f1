#pragma once

#include <string>
#include <utility>
#include <vector>

namespace covforms {

// One named check inside a verification report. `detail` carries the
// counterexample (term key, test form, evaluation point) when pass is false.
struct CheckResult {
  std::string label;
  bool pass = true;
  std::string detail;
};

struct Report {
  std::string name;
  std::vector<CheckResult> checks;

  bool pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }

  void add(std::string label, bool ok, std::string detail = {}) {
    checks.push_back({std::move(label), ok, std::move(detail)});
  }

  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.label, c.pass, c.detail});
  }

  const CheckResult* first_failure() const {
    for (const auto& c : checks) {
      if (!c.pass) return &c;
    }
    return nullptr;
  }
};

}  // namespace covforms
