#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pshcalc::cli {

/// Deliberate corruption used to prove that a suite notices it.
enum class Fault { none, diag, support, inverse, oracle, symmetry };

struct SuiteResult {
  std::string name;
  std::string range;
  bool pass = true;
  std::string detail;  // first failure, empty on PASS
};

struct SuiteOptions {
  int n_max = 0;
  std::size_t brute_force_cell_limit = 64;
  unsigned threads = 1;
  int max_n = 25;
  Fault fault = Fault::none;
};

/// Brute-force agreement for n <= 8; every other suite for all n <= n_max.
/// Faults are injected at the largest n a suite visits.
std::vector<SuiteResult> run_suites(const SuiteOptions& options);

}  // namespace pshcalc::cli
