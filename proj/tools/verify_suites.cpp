#include "verify_suites.hpp"

#include <algorithm>
#include <exception>

#include "pshcalc/bipartite_count.hpp"
#include "pshcalc/errors.hpp"
#include "pshcalc/transition.hpp"

namespace pshcalc::cli {

namespace {

constexpr int kOracleMaxN = 8;

enum SuiteId {
  kOracle,
  kSymmetry,
  kSupport,
  kDiagonal,
  kTriangularity,
  kInverse,
  kWavefront,
  kSuiteCount
};

class Ledger {
 public:
  explicit Ledger(int n_max) {
    const std::string all = "n<=" + std::to_string(n_max);
    results_ = {
        {"oracle-equivalence", "n<=" + std::to_string(std::min(n_max, kOracleMaxN)), true, {}},
        {"symmetry", all, true, {}},
        {"gale-ryser-support", all, true, {}},
        {"diagonal-ones", all, true, {}},
        {"triangularity", all, true, {}},
        {"inverse-roundtrip", all, true, {}},
        {"wavefront-match", all, true, {}},
    };
  }

  void fail(SuiteId id, int n, const std::string& detail) {
    auto& r = results_[id];
    if (!r.pass) return;
    r.pass = false;
    r.detail = "n=" + std::to_string(n) + ": " + detail;
  }

  std::vector<SuiteResult> take() { return std::move(results_); }

 private:
  std::vector<SuiteResult> results_;
};

std::string at(const PartitionIndex& order, std::size_t i, std::size_t j) {
  return "(" + display_partition(order.at(i)) + ", " + display_partition(order.at(j)) + ")";
}

void check_n(int n, const SuiteOptions& opt, Ledger& ledger) {
  const bool last = n == opt.n_max;
  BuildOptions build;
  build.max_n = opt.max_n;
  build.threads = opt.threads;
  MemoTable memo;
  build.memo = &memo;

  auto order = make_index(n, std::max(n, opt.max_n));
  const std::size_t p = order->size();

  // Raw counts on every pair, without the support pre-filter used by the
  // matrix builders.
  std::vector<BigInt> raw(p * p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) raw[i * p + j] = s_count(order->at(i), order->at(j), memo);
  }

  if (n <= kOracleMaxN) {
    const bool inject = opt.fault == Fault::oracle && n == std::min(opt.n_max, kOracleMaxN);
    try {
      for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < p; ++j) {
          BigInt fast = raw[i * p + j];
          if (inject && i + 1 == p && j + 1 == p) fast += 1;
          BigInt slow = s_bruteforce(order->at(i), order->at(j), opt.brute_force_cell_limit);
          if (fast != slow) {
            ledger.fail(kOracle, n, "s" + at(*order, i, j) + ": dp " + to_decimal(fast) +
                                        " vs brute force " + to_decimal(slow));
          }
        }
      }
    } catch (const GuardExceeded& e) {
      ledger.fail(kOracle, n, e.what());
    }
  }

  {
    auto sym = raw;
    if (opt.fault == Fault::symmetry && last) sym[p - 1] += 1;
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = i + 1; j < p; ++j) {
        if (sym[i * p + j] != sym[j * p + i]) {
          ledger.fail(kSymmetry, n, "s" + at(*order, i, j) + " = " + to_decimal(sym[i * p + j]) +
                                        " but s" + at(*order, j, i) + " = " +
                                        to_decimal(sym[j * p + i]));
        }
      }
    }
    auto pairing = pairing_matrix(n, build);
    for (std::size_t k = 0; k < p * p; ++k) {
      if (pairing.entries()[k] != raw[k]) {
        ledger.fail(kSymmetry, n, "pairing matrix disagrees with direct counts at " +
                                      at(*order, k / p, k % p));
      }
    }
  }

  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      bool positive = sgn(raw[i * p + j]) > 0;
      if (opt.fault == Fault::support && last && i == 0 && j + 1 == p) positive = !positive;
      if (positive != gale_ryser_feasible(order->at(i), order->at(j))) {
        ledger.fail(kSupport, n, "s" + at(*order, i, j) + " = " + to_decimal(raw[i * p + j]) +
                                     " disagrees with the Gale-Ryser criterion");
      }
    }
  }

  const auto m = transition_matrix(n, build);

  {
    auto corrupted = m;
    if (opt.fault == Fault::diag && last) corrupted(p - 1, p - 1) = 2;
    for (std::size_t i = 0; i < p; ++i) {
      const auto t = order->transpose_index(i);
      if (raw[i * p + t] != 1 || corrupted(i, i) != 1) {
        ledger.fail(kDiagonal, n, "s(" + display_partition(order->at(i)) + ", " +
                                      display_partition(order->at(t)) + ") = " +
                                      to_decimal(corrupted(i, i)) + ", expected 1");
      }
    }
    if (opt.fault == Fault::support && last) corrupted(0, p - 1) = 1;
    auto report = verify_triangular(corrupted);
    if (!report.pass()) ledger.fail(kTriangularity, n, describe(report.failures.front()));
  }

  try {
    auto inverse = invert_unitriangular(m);
    if (opt.fault == Fault::inverse && last) inverse(p - 1, 0) += 1;
    auto report = verify_inverse(m, inverse);
    if (!report.pass()) ledger.fail(kInverse, n, report.failures.front());
    for (const auto& alpha : *order) {
      auto c = CoefficientVector::indicator(Side::c, alpha);
      auto back = c_from_d(m, d_from_c(m, c));
      if (!(back == c)) {
        ledger.fail(kInverse, n, "round trip changed the indicator at " + display_partition(alpha));
      }
    }
  } catch (const Error& e) {
    ledger.fail(kInverse, n, e.what());
  }

  for (const auto& alpha : *order) {
    try {
      auto c = CoefficientVector::indicator(Side::c, alpha);
      auto wc = wavefront(c);
      auto wd = wavefront(d_from_c(m, c));
      if (!(wc.partition == wd.partition) || !wc.coefficient_is_one || !wd.coefficient_is_one) {
        ledger.fail(kWavefront, n, "indicator at " + display_partition(alpha) + " maps to " +
                                       display_partition(wd.partition) + " with coefficient " +
                                       to_decimal(wd.coefficient));
      }
    } catch (const WavefrontError& e) {
      ledger.fail(kWavefront, n, e.what());
    }
  }
}

}  // namespace

std::vector<SuiteResult> run_suites(const SuiteOptions& options) {
  Ledger ledger(options.n_max);
  for (int n = 0; n <= options.n_max; ++n) check_n(n, options, ledger);
  return ledger.take();
}

}  // namespace pshcalc::cli
