#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace turaev {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string witness;  // empty on pass; failure details otherwise

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Ordered list of named pass/fail results. Verifiers never throw on a
/// failed identity; failures are data, carried here with a witness.
struct Report {
  std::vector<CheckResult> checks;

  void add(std::string name, bool pass, std::string witness = "") {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }

  void merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const CheckResult* find(const std::string& name) const {
    for (const CheckResult& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::size_t fail_count() const {
    std::size_t k = 0;
    for (const CheckResult& c : checks) k += c.pass ? 0 : 1;
    return k;
  }

  std::string summary() const {
    std::ostringstream os;
    for (const CheckResult& c : checks) {
      os << (c.pass ? "pass" : "FAIL") << "  " << c.name;
      if (!c.pass && !c.witness.empty()) os << "  [" << c.witness << "]";
      os << "\n";
    }
    return os.str();
  }

  friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace turaev
