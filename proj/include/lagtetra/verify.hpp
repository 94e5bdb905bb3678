#pragma once

#include <string>
#include <vector>

#include "lagtetra/sampling.hpp"

namespace lagtet {

// Execution policy for the self-check suites and the CLI.
struct RunConfig {
  double tol = 1e-9;
  double cluster = 1e-6;
  uint64_t seed = 1729;
  int samples = 100;

  Tol tolerances() const { return {tol, cluster}; }
};

// DomainError unless 0 < tol < cluster < 1e-3 and samples > 0.
void validate(const RunConfig& cfg);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  bool passed() const;
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names,
                                    const RunConfig& cfg);

}  // namespace lagtet
