// Pass/fail reports shared by all verification routines.
#pragma once

#include <string>
#include <vector>

namespace qmod {

struct Check {
  std::string name;
  bool pass = true;
  std::vector<long> witness;  // basis indices on failure
  std::string detail;
};

struct Report {
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool ok, std::vector<long> witness = {}, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(witness), std::move(detail)});
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  void append(const Report& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

}  // namespace qmod
