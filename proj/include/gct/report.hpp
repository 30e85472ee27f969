#pragma once

#include <string>
#include <vector>

namespace gct {

// Outcome of a law suite or validation pass: one line per checked law, with a
// counterexample witness when the law fails.
struct Report {
  struct Check {
    std::string name;
    std::string status;  // "pass" | "fail" | "skipped"
    std::string detail;
  };

  std::string title;
  std::vector<Check> checks;

  void pass(const std::string& name, const std::string& detail = "") {
    checks.push_back({name, "pass", detail});
  }
  void fail(const std::string& name, const std::string& detail = "") {
    checks.push_back({name, "fail", detail});
  }
  void skip(const std::string& name, const std::string& detail = "") {
    checks.push_back({name, "skipped", detail});
  }
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    if (ok)
      pass(name, detail);
    else
      fail(name, detail);
  }
  void absorb(const Report& other) {
    for (const auto& c : other.checks) checks.push_back(c);
  }

  bool allPass() const {
    for (const auto& c : checks)
      if (c.status == "fail") return false;
    return true;
  }
  std::size_t failCount() const {
    std::size_t n = 0;
    for (const auto& c : checks)
      if (c.status == "fail") ++n;
    return n;
  }
};

}  // namespace gct
