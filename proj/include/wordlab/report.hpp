#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wordlab {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Structured outcome of a verification harness: one entry per check.
struct Report {
  std::string title;
  std::vector<Check> checks;
  // informational key/value pairs that are not pass/fail
  std::vector<std::pair<std::string, std::string>> facts;

  void add(std::string name, bool passed, std::string detail = "") {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
  void note(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  const std::string* fact(const std::string& key) const {
    for (const auto& f : facts)
      if (f.first == key) return &f.second;
    return nullptr;
  }
};

}  // namespace wordlab
