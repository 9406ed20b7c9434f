#pragma once

#include <string>
#include <vector>

namespace lie3 {

// Outcome of a verification. Failures are reported, not thrown; violations
// are preformatted lines in a deterministic (lexicographic tuple) order.
struct Report {
  std::string check;
  bool pass = true;
  std::vector<std::string> violations;

  void fail(std::string what) {
    pass = false;
    violations.push_back(std::move(what));
  }
  std::string summary() const {
    return check + ": " + (pass ? "pass" : "fail (" + std::to_string(violations.size()) + " violations)");
  }
};

// Aggregate of sub-reports with a single verdict.
struct CompositeReport {
  std::string check;
  std::vector<Report> parts;

  bool pass() const {
    for (const Report& r : parts)
      if (!r.pass) return false;
    return true;
  }
};

}  // namespace lie3
