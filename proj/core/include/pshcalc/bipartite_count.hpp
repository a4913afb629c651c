#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pshcalc/bigint.hpp"
#include "pshcalc/partition.hpp"

namespace pshcalc {

/// Number of 0-1 matrices with row sums alpha and column sums beta, i.e. the
/// number of bipartite graphs on labelled vertices with those degrees.
using CountValue = BigInt;

inline constexpr std::size_t kBruteForceCellLimit = 64;

/// Pascal triangle in exact arithmetic, rows 0..max_row.
class BinomialTable {
 public:
  explicit BinomialTable(unsigned max_row);

  unsigned max_row() const { return max_row_; }

  /// C(n, k); zero when k > n. Requires n <= max_row().
  const BigInt& operator()(unsigned n, unsigned k) const;

 private:
  unsigned max_row_;
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_;
};

/// Process-wide table covering at least `max_row`. Tables are never freed, so
/// the reference stays valid for the life of the program.
const BinomialTable& binomials(unsigned max_row);

/// DP state: the rows not yet placed and the residual column sums, sorted
/// weakly decreasing with zero columns dropped. Both halves are stored by
/// value so a single table can serve many top-level (alpha, beta) pairs.
class MemoKey {
 public:
  MemoKey(std::span<const int> rows_remaining, std::span<const int> residual_columns);

  const std::string& bytes() const { return bytes_; }
  friend bool operator==(const MemoKey&, const MemoKey&) = default;

 private:
  std::string bytes_;
};

struct MemoKeyHash {
  std::size_t operator()(const MemoKey& key) const noexcept {
    return std::hash<std::string>{}(key.bytes());
  }
};

struct MemoStats {
  std::uint64_t hits = 0;
  std::uint64_t misses = 0;
  std::size_t entries = 0;

  double hit_rate() const {
    auto total = hits + misses;
    return total == 0 ? 0.0 : static_cast<double>(hits) / static_cast<double>(total);
  }
};

/// Memo table safe for concurrent lookups and inserts. Concurrent inserts of
/// the same key always carry the same value, so the first writer wins.
class MemoTable {
 public:
  explicit MemoTable(std::size_t shard_count = 64);
  MemoTable(const MemoTable&) = delete;
  MemoTable& operator=(const MemoTable&) = delete;

  std::optional<BigInt> find(const MemoKey& key) const;
  void insert(MemoKey key, BigInt value);
  MemoStats stats() const;

 private:
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<MemoKey, BigInt, MemoKeyHash> map;
  };
  Shard& shard_for(const MemoKey& key) const;

  std::unique_ptr<Shard[]> shards_;
  std::size_t shard_count_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
};

/// Exhaustive row-by-row enumeration. Oracle only: throws GuardExceeded when
/// length(alpha) * length(beta) exceeds `cell_limit`. Unequal weights give 0.
CountValue s_bruteforce(const Partition& alpha, const Partition& beta,
                        std::size_t cell_limit = kBruteForceCellLimit);

/// Memoized dynamic program over rows, collapsing columns with equal residual
/// sums into groups. Uses a private memo table.
CountValue s_count(const Partition& alpha, const Partition& beta);

/// As above, sharing `memo` with other calls (possibly on other threads).
CountValue s_count(const Partition& alpha, const Partition& beta, MemoTable& memo);

/// Gale–Ryser: equal weights and transpose(alpha) dominates beta. Equivalent
/// to s_count(alpha, beta) > 0.
bool gale_ryser_feasible(const Partition& alpha, const Partition& beta);

}  // namespace pshcalc
