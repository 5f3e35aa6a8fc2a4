#pragma once

#include <string>
#include <vector>

namespace su11 {

/// One named residual check inside a suite.
struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string worst_case;
};

/// Cutoff-doubling stability of the suite's oracle-side numbers.
struct GateResult {
  double delta = 0.0;
  double tolerance = 1e-8;
  bool passed = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  GateResult gate;
  double seconds = 0.0;

  bool passed() const;
  double max_residual() const;
};

SuiteResult run_dfunc_suite();
SuiteResult run_kernel_suite();
SuiteResult run_wigner_suite();
SuiteResult run_interferometer_suite();

/// suite in {dfunc, kernel, wigner, interferometer, all}; throws
/// std::invalid_argument on anything else.
std::vector<SuiteResult> run_suites(const std::string& suite);

std::string report_to_json(const std::vector<SuiteResult>& results);

}  // namespace su11
