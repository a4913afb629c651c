#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "pshcalc/bipartite_count.hpp"
#include "pshcalc/errors.hpp"
#include "pshcalc/io.hpp"
#include "pshcalc/partition.hpp"
#include "pshcalc/transition.hpp"
#include "verify_suites.hpp"

namespace pshcalc::cli {

namespace {

using io::Json;

// Thrown for invalid command-line input that CLI11 cannot catch itself.
struct UsageError : Error {
  using Error::Error;
};

ParseMode parse_mode(const CliConfig& config) {
  return config.strict_partition_parse ? ParseMode::strict : ParseMode::lenient;
}

void require_within_guard(int n, const CliConfig& config) {
  if (n < 0) throw UsageError("n must be nonnegative");
  if (n > config.max_n) {
    throw GuardExceeded("n = " + std::to_string(n) + " exceeds --max-n " +
                        std::to_string(config.max_n));
  }
}

BuildOptions build_options(const CliConfig& config) {
  BuildOptions o;
  o.max_n = config.max_n;
  o.threads = config.threads;
  return o;
}

std::string quoted(const std::string& text) { return "\"" + text + "\""; }

// ---- partitions -----------------------------------------------------------

struct PartitionsArgs {
  int n = 0;
  bool transpose = false;
  bool dominance = false;
};

int cmd_partitions(const PartitionsArgs& a, const CliConfig& config, std::ostream& out) {
  require_within_guard(a.n, config);
  PartitionIndex index(a.n, config.max_n);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (a.dominance) {
    for (std::size_t i = 0; i < index.size(); ++i) {
      for (const auto& lower : covered_by(index.at(i))) edges.emplace_back(i, index.index_of(lower));
    }
  }

  switch (config.output_format) {
    case OutputFormat::table:
      for (std::size_t i = 0; i < index.size(); ++i) {
        out << i << ' ' << display_partition(index.at(i));
        if (a.transpose) out << ' ' << display_partition(index.at(index.transpose_index(i)));
        out << '\n';
      }
      if (a.dominance) {
        out << "# dominance covers (upper -> lower)\n";
        for (auto [u, l] : edges) {
          out << u << " -> " << l << "  " << display_partition(index.at(u)) << " > "
              << display_partition(index.at(l)) << '\n';
        }
      }
      break;
    case OutputFormat::csv:
      out << "index,partition" << (a.transpose ? ",transpose" : "") << '\n';
      for (std::size_t i = 0; i < index.size(); ++i) {
        out << i << ',' << quoted(format_partition(index.at(i)));
        if (a.transpose) out << ',' << quoted(format_partition(index.at(index.transpose_index(i))));
        out << '\n';
      }
      if (a.dominance) {
        out << "\nupper,lower\n";
        for (auto [u, l] : edges) out << u << ',' << l << '\n';
      }
      break;
    case OutputFormat::json: {
      Json list = Json::array();
      for (std::size_t i = 0; i < index.size(); ++i) {
        Json item{{"index", i}, {"parts", io::to_json(index.at(i))}};
        if (a.transpose) item["transpose"] = io::to_json(index.at(index.transpose_index(i)));
        list.push_back(std::move(item));
      }
      Json doc{{"n", a.n}, {"partitions", std::move(list)}};
      if (a.dominance) {
        Json hasse = Json::array();
        for (auto [u, l] : edges) hasse.push_back(Json::array({u, l}));
        doc["hasse"] = std::move(hasse);
      }
      out << io::dump(doc);
      break;
    }
  }
  return kExitOk;
}

// ---- count ----------------------------------------------------------------

struct CountArgs {
  std::string alpha;
  std::string beta;
  bool oracle = false;
};

int cmd_count(const CountArgs& a, const CliConfig& config, std::ostream& out, std::ostream& err) {
  const auto alpha = parse_partition(a.alpha, parse_mode(config));
  const auto beta = parse_partition(a.beta, parse_mode(config));
  if (std::max(alpha.weight(), beta.weight()) > config.max_n) {
    throw GuardExceeded("partition weight exceeds --max-n " + std::to_string(config.max_n));
  }
  const BigInt value = s_count(alpha, beta);
  BigInt oracle;
  bool agree = true;
  if (a.oracle) {
    oracle = s_bruteforce(alpha, beta, config.brute_force_cell_limit);
    agree = oracle == value;
  }

  switch (config.output_format) {
    case OutputFormat::table:
      out << to_decimal(value) << '\n';
      if (a.oracle) {
        out << "oracle " << to_decimal(oracle) << ' ' << (agree ? "agree" : "DISAGREE") << '\n';
      }
      break;
    case OutputFormat::csv:
      out << "alpha,beta,s" << (a.oracle ? ",oracle,agree" : "") << '\n';
      out << quoted(format_partition(alpha)) << ',' << quoted(format_partition(beta)) << ','
          << to_decimal(value);
      if (a.oracle) out << ',' << to_decimal(oracle) << ',' << (agree ? "true" : "false");
      out << '\n';
      break;
    case OutputFormat::json: {
      Json doc{{"alpha", io::to_json(alpha)}, {"beta", io::to_json(beta)}, {"s", to_decimal(value)}};
      if (a.oracle) {
        doc["oracle"] = to_decimal(oracle);
        doc["agree"] = agree;
      }
      out << io::dump(doc);
      break;
    }
  }
  if (!agree) {
    err << "count: dynamic program and brute force disagree\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

// ---- matrix ---------------------------------------------------------------

struct MatrixArgs {
  int n = 0;
  std::string kind;
  bool verify = false;
  std::string output;
};

void write_matrix(const TransitionMatrix& m, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::json:
      out << io::dump(io::to_json(m), -1);
      break;
    case OutputFormat::csv:
      io::write_csv(out, m);
      break;
    case OutputFormat::table:
      io::write_table(out, m);
      break;
  }
}

bool verify_pairing(const TransitionMatrix& s, std::ostream& err) {
  const auto& order = s.order();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (s(i, j) != s(j, i)) {
        err << "verify: FAIL S is not symmetric at (" << display_partition(order.at(i)) << ", "
            << display_partition(order.at(j)) << ")\n";
        return false;
      }
      if ((sgn(s(i, j)) > 0) != gale_ryser_feasible(order.at(i), order.at(j))) {
        err << "verify: FAIL support differs from Gale-Ryser at ("
            << display_partition(order.at(i)) << ", " << display_partition(order.at(j)) << ")\n";
        return false;
      }
    }
  }
  return true;
}

int cmd_matrix(const MatrixArgs& a, const CliConfig& config, std::ostream& out, std::ostream& err) {
  require_within_guard(a.n, config);
  const MatrixKind kind = parse_matrix_kind(a.kind);
  const auto options = build_options(config);

  bool ok = true;
  std::optional<TransitionMatrix> result;
  if (kind == MatrixKind::pairing) {
    result = pairing_matrix(a.n, options);
    if (a.verify) ok = verify_pairing(*result, err);
  } else {
    auto m = transition_matrix(a.n, options);
    if (kind == MatrixKind::transition) {
      if (a.verify) {
        auto report = verify_triangular(m);
        ok = report.pass();
        for (const auto& f : report.failures) err << "verify: FAIL " << describe(f) << '\n';
      }
      result = std::move(m);
    } else {
      auto inverse = invert_unitriangular(m);
      if (a.verify) {
        auto report = verify_inverse(m, inverse);
        ok = report.pass();
        for (const auto& f : report.failures) err << "verify: FAIL " << f << '\n';
      }
      result = std::move(inverse);
    }
  }
  if (a.verify && ok) err << "verify: PASS\n";

  if (a.output.empty() || a.output == "-") {
    write_matrix(*result, config.output_format, out);
  } else {
    std::ofstream file(a.output, std::ios::binary);
    if (!file) throw UsageError("cannot open " + a.output + " for writing");
    write_matrix(*result, config.output_format, file);
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

// ---- convert --------------------------------------------------------------

struct ConvertArgs {
  std::string direction;
  std::string input = "-";
};

int cmd_convert(const ConvertArgs& a, const CliConfig& config, std::istream& in,
                std::ostream& out) {
  Json doc;
  try {
    if (a.input == "-") {
      doc = Json::parse(in);
    } else {
      std::ifstream file(a.input, std::ios::binary);
      if (!file) throw UsageError("cannot open " + a.input);
      doc = Json::parse(file);
    }
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const auto v = io::coefficient_vector_from_json(doc, parse_mode(config));
  const Side expected = a.direction == "c2d" ? Side::c : Side::d;
  if (v.side() != expected) {
    throw TagMismatch(a.direction + " expects a " + std::string(to_string(expected)) +
                      "-side vector, got side " + std::string(to_string(v.side())));
  }
  require_within_guard(v.n(), config);
  const auto m = transition_matrix(v.n(), build_options(config));
  const auto result = a.direction == "c2d" ? d_from_c(m, v) : c_from_d(m, v);

  Json report = Json::object();
  try {
    auto w = wavefront(result);
    report["wavefront"] = Json{{"partition", format_partition(w.partition)},
                               {"coefficient", to_decimal(w.coefficient)},
                               {"coefficient_is_one", w.coefficient_is_one}};
  } catch (const WavefrontError& e) {
    report["wavefront"] = Json{{"error", e.what()}};
  }
  const auto& d_side = result.side() == Side::d ? result : v;
  report["d_nonnegative"] = d_side.is_nonnegative();

  Json json = io::to_json(result);
  json["report"] = std::move(report);
  out << io::dump(json);
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  int n_max = 0;
  std::string fault = "none";
};

int cmd_verify(const VerifyArgs& a, const CliConfig& config, std::ostream& out) {
  require_within_guard(a.n_max, config);
  static const std::map<std::string, Fault> faults{
      {"none", Fault::none},       {"diag", Fault::diag},     {"support", Fault::support},
      {"inverse", Fault::inverse}, {"oracle", Fault::oracle}, {"symmetry", Fault::symmetry}};
  SuiteOptions options;
  options.n_max = a.n_max;
  options.brute_force_cell_limit = config.brute_force_cell_limit;
  options.threads = config.threads;
  options.max_n = config.max_n;
  options.fault = faults.at(a.fault);
  if ((options.fault == Fault::support || options.fault == Fault::symmetry) && a.n_max < 2) {
    throw UsageError("--inject-fault " + a.fault + " needs n_max >= 2");
  }

  const auto results = run_suites(options);
  const bool all = std::all_of(results.begin(), results.end(), [](auto& r) { return r.pass; });

  switch (config.output_format) {
    case OutputFormat::table:
      out << std::left << std::setw(20) << "suite" << std::setw(8) << "range" << std::setw(8)
          << "result" << "detail\n";
      for (const auto& r : results) {
        out << std::setw(20) << r.name << std::setw(8) << r.range << std::setw(8)
            << (r.pass ? "PASS" : "FAIL") << r.detail << '\n';
      }
      out << std::setw(20) << "overall" << std::setw(8) << "" << (all ? "PASS" : "FAIL") << '\n'
          << std::right;
      break;
    case OutputFormat::csv:
      out << "suite,range,result,detail\n";
      for (const auto& r : results) {
        out << r.name << ',' << quoted(r.range) << ',' << (r.pass ? "PASS" : "FAIL") << ','
            << quoted(r.detail) << '\n';
      }
      break;
    case OutputFormat::json: {
      Json list = Json::array();
      for (const auto& r : results) {
        list.push_back(Json{{"name", r.name},
                            {"range", r.range},
                            {"result", r.pass ? "PASS" : "FAIL"},
                            {"detail", r.detail}});
      }
      out << io::dump(Json{{"n_max", a.n_max}, {"suites", std::move(list)}, {"pass", all}});
      break;
    }
  }
  return all ? kExitOk : kExitVerificationFailed;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
  int n = 0;
  bool skip_cold = false;
};

std::uint64_t fnv1a(const TransitionMatrix& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::string_view bytes) {
    for (unsigned char ch : bytes) {
      h ^= ch;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& e : m.entries()) {
    mix(to_decimal(e));
    mix(",");
  }
  return h;
}

int cmd_bench(const BenchArgs& a, const CliConfig& config, std::ostream& out, std::ostream& err) {
  require_within_guard(a.n, config);
  using Clock = std::chrono::steady_clock;
  auto seconds = [](Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  };

  auto options = build_options(config);
  MemoTable memo;
  options.memo = &memo;
  auto t0 = Clock::now();
  const auto shared = transition_matrix(a.n, options);
  const double shared_time = seconds(t0);
  const auto stats = memo.stats();

  bool all_equal = true;
  std::optional<double> cold_time;
  if (!a.skip_cold) {
    auto cold_options = build_options(config);
    cold_options.memo_policy = MemoPolicy::per_cell;
    t0 = Clock::now();
    all_equal = transition_matrix(a.n, cold_options) == shared && all_equal;
    cold_time = seconds(t0);
  }
  if (config.threads > 1) {
    auto single = build_options(config);
    single.threads = 1;
    all_equal = transition_matrix(a.n, single) == shared && all_equal;
  }

  const auto& order = shared.order();
  std::size_t candidates = 0;
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < shared.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (dominates(order.at(j), order.at(i))) ++candidates;
      if (sgn(shared(i, j)) != 0) ++nonzero;
    }
  }
  std::ostringstream digest;
  digest << std::hex << std::setw(16) << std::setfill('0') << fnv1a(shared);

  // Timings vary run to run and go to stderr; stdout stays byte-stable.
  err << std::fixed << std::setprecision(3) << "bench: shared memo " << shared_time << " s, "
      << stats.entries << " memo entries, hit rate " << stats.hit_rate() * 100.0 << "%";
  if (cold_time) err << "; cold " << *cold_time << " s";
  err << "; threads " << config.threads << '\n';

  switch (config.output_format) {
    case OutputFormat::table:
      out << "n                 " << a.n << '\n'
          << "partitions        " << shared.size() << '\n'
          << "candidate cells   " << candidates << '\n'
          << "nonzero entries   " << nonzero << '\n'
          << "max entry bits    " << shared.max_bit_length() << '\n'
          << "digest            " << digest.str() << '\n'
          << "recomputed equal  " << (all_equal ? "yes" : "NO") << '\n';
      break;
    case OutputFormat::csv:
      out << "n,partitions,candidate_cells,nonzero_entries,max_entry_bits,digest,recomputed_equal\n"
          << a.n << ',' << shared.size() << ',' << candidates << ',' << nonzero << ','
          << shared.max_bit_length() << ',' << digest.str() << ',' << (all_equal ? "true" : "false")
          << '\n';
      break;
    case OutputFormat::json:
      out << io::dump(Json{{"n", a.n},
                           {"partitions", shared.size()},
                           {"candidate_cells", candidates},
                           {"nonzero_entries", nonzero},
                           {"max_entry_bits", shared.max_bit_length()},
                           {"digest", digest.str()},
                           {"recomputed_equal", all_equal}});
      break;
  }
  return all_equal ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact partition-lattice combinatorics: s(alpha, beta) counts, pairing and "
               "transition matrices, and c <-> d coefficient conversion."};
  app.name("pshcalc");
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig config;
  std::string format = "table";
  bool lenient = false;
  app.add_option("--max-n", config.max_n, "Largest n accepted by any command")
      ->envname("PSHCALC_MAX_N")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--threads", config.threads, "Worker threads for matrix fills")
      ->check(CLI::PositiveNumber);
  app.add_flag("--lenient-parse", lenient, "Sort partition parts instead of rejecting them");
  app.add_option("--brute-force-cell-limit", config.brute_force_cell_limit,
                 "Largest rows*columns grid the brute-force oracle accepts");

  PartitionsArgs partitions_args;
  auto* partitions = app.add_subcommand("partitions", "List P(n) in canonical order");
  partitions->add_option("n", partitions_args.n)->required();
  partitions->add_flag("--transpose", partitions_args.transpose, "Add the conjugate partition");
  partitions->add_flag("--dominance", partitions_args.dominance,
                       "Emit the covering relations of the dominance order");

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Number of 0-1 matrices with row sums alpha and "
                                            "column sums beta");
  count->add_option("alpha", count_args.alpha, "e.g. 3,1")->required();
  count->add_option("beta", count_args.beta, "e.g. 2,1,1")->required();
  count->add_flag("--oracle", count_args.oracle, "Also run the brute-force enumeration");

  MatrixArgs matrix_args;
  auto* matrix = app.add_subcommand("matrix", "Build S(n), M(n) or M(n)^-1");
  matrix->add_option("n", matrix_args.n)->required();
  matrix->add_option("kind", matrix_args.kind)
      ->required()
      ->check(CLI::IsMember({"S", "M", "Minv"}));
  matrix->add_flag("--verify", matrix_args.verify, "Check the structural guarantees");
  matrix->add_option("-o,--output", matrix_args.output, "Write to a file instead of stdout");

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand("convert", "Convert c <-> d coefficient vectors (JSON)");
  convert->add_option("direction", convert_args.direction)
      ->required()
      ->check(CLI::IsMember({"c2d", "d2c"}));
  convert->add_option("input", convert_args.input, "JSON file, or - for stdin");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the property suites for all n <= n_max");
  verify->add_option("n_max", verify_args.n_max)->required();
  verify->add_option("--inject-fault", verify_args.fault, "Corrupt one suite's input")
      ->check(CLI::IsMember({"none", "diag", "support", "inverse", "oracle", "symmetry"}));

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Time the construction of M(n)");
  bench->add_option("n", bench_args.n)->required();
  bench->add_flag("--skip-cold", bench_args.skip_cold, "Skip the per-cell memo run");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }
  config.strict_partition_parse = !lenient;
  config.output_format = format == "json" ? OutputFormat::json
                         : format == "csv" ? OutputFormat::csv
                                           : OutputFormat::table;

  try {
    if (*partitions) return cmd_partitions(partitions_args, config, out);
    if (*count) return cmd_count(count_args, config, out, err);
    if (*matrix) return cmd_matrix(matrix_args, config, out, err);
    if (*convert) return cmd_convert(convert_args, config, in, out);
    if (*verify) return cmd_verify(verify_args, config, out);
    if (*bench) return cmd_bench(bench_args, config, out, err);
  } catch (const std::exception& e) {
    err << "pshcalc: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pshcalc::cli
