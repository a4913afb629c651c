#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "pshcalc/transition.hpp"

namespace pshcalc::cli {

enum class OutputFormat { json, csv, table };

struct CliConfig {
  int max_n = kMatrixMaxN;
  std::size_t brute_force_cell_limit = kBruteForceCellLimit;
  OutputFormat output_format = OutputFormat::table;
  unsigned threads = 1;
  bool strict_partition_parse = true;
};

/// Exit codes: 0 success, 1 a requested verification failed, 2 bad usage or input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). All regular output goes
/// to `out`; diagnostics, timings and verification verdicts go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pshcalc::cli
