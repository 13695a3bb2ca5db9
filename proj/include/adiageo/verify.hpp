#pragma once

// Named verification suites behind `verify --suite ...` and the acceptance
// runner. Each check carries its measured error and pinned tolerance.

#include <string>
#include <vector>

namespace adiageo::verify {

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  /// Acceptance criterion this check belongs to (1..10, 0 = auxiliary).
  int criterion = 0;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool pass() const;
};

const std::vector<std::string>& suite_names();

/// Runs one suite; throws std::invalid_argument on an unknown name.
SuiteResult run_suite(const std::string& name);

/// All suites, in the canonical order.
std::vector<SuiteResult> run_all();

}  // namespace adiageo::verify
