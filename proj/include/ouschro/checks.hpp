#pragma once

#include <map>
#include <string>
#include <vector>

#include "ouschro/io.hpp"
#include "ouschro/probes.hpp"

namespace ouschro {

/// Configuration of the validation harness (the `validate` subcommand).
struct ValidationOptions {
  int m = 1;
  int n = 512;
  double r = 12.0;
  /// Per-check tolerance overrides keyed by check name.
  std::map<std::string, double> tolerances;
  /// Checks to run; empty means all. Unknown names are rejected.
  std::vector<std::string> only;
  /// Fault-injection hook for exercising the failure path; "" disables.
  /// Supported: "wrong-jminus-prefactor".
  std::string inject_fault;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double tolerance = 0.0;
  Json details;
};

/// Names: unitarity, group-law, periodicity, two-path, gauge-equivalence,
/// pde-residual, riccati, weighted-identity.
const std::vector<std::string>& validation_check_names();

std::vector<CheckResult> run_validation(const ValidationOptions& opt);

Json validation_report(const ValidationOptions& opt,
                       const std::vector<CheckResult>& results);

}  // namespace ouschro
