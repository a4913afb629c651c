#include "pshcalc/bipartite_count.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "pshcalc/errors.hpp"

namespace pshcalc {

BinomialTable::BinomialTable(unsigned max_row) : max_row_(max_row), rows_(max_row + 1), zero_(0) {
  for (unsigned n = 0; n <= max_row; ++n) {
    auto& row = rows_[n];
    row.resize(n + 1);
    row[0] = 1;
    row[n] = 1;
    for (unsigned k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
  }
}

const BigInt& BinomialTable::operator()(unsigned n, unsigned k) const {
  if (k > n) return zero_;
  return rows_.at(n)[k];
}

const BinomialTable& binomials(unsigned max_row) {
  static std::mutex mutex;
  static std::vector<std::unique_ptr<BinomialTable>> tables;
  std::lock_guard lock(mutex);
  if (tables.empty() || tables.back()->max_row() < max_row) {
    unsigned size = std::max(64u, max_row);
    if (!tables.empty()) size = std::max(size, 2 * tables.back()->max_row());
    tables.push_back(std::make_unique<BinomialTable>(size));
  }
  return *tables.back();
}

namespace {

void append_varint(std::string& out, int value) {
  auto v = static_cast<std::uint32_t>(value);
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7f) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

}  // namespace

MemoKey::MemoKey(std::span<const int> rows_remaining, std::span<const int> residual_columns) {
  bytes_.reserve(rows_remaining.size() + residual_columns.size() + 1);
  for (int r : rows_remaining) append_varint(bytes_, r);
  // Parts are positive, so no varint byte is zero.
  bytes_.push_back('\0');
  for (int c : residual_columns) append_varint(bytes_, c);
}

MemoTable::MemoTable(std::size_t shard_count)
    : shards_(std::make_unique<Shard[]>(std::max<std::size_t>(1, shard_count))),
      shard_count_(std::max<std::size_t>(1, shard_count)) {}

MemoTable::Shard& MemoTable::shard_for(const MemoKey& key) const {
  return shards_[MemoKeyHash{}(key) % shard_count_];
}

std::optional<BigInt> MemoTable::find(const MemoKey& key) const {
  auto& shard = shard_for(key);
  std::shared_lock lock(shard.mutex);
  auto it = shard.map.find(key);
  if (it == shard.map.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void MemoTable::insert(MemoKey key, BigInt value) {
  auto& shard = shard_for(key);
  std::unique_lock lock(shard.mutex);
  shard.map.try_emplace(std::move(key), std::move(value));
}

MemoStats MemoTable::stats() const {
  MemoStats out;
  out.hits = hits_.load(std::memory_order_relaxed);
  out.misses = misses_.load(std::memory_order_relaxed);
  for (std::size_t i = 0; i < shard_count_; ++i) {
    std::shared_lock lock(shards_[i].mutex);
    out.entries += shards_[i].map.size();
  }
  return out;
}

namespace {

// Row-by-row enumeration over explicit column subsets. Columns keep their
// order from beta; nothing is symmetrized.
class BruteForce {
 public:
  BruteForce(std::span<const int> rows, std::span<const int> cols)
      : rows_(rows), residual_(cols.begin(), cols.end()) {}

  std::uint64_t run() { return place_row(0); }

 private:
  std::uint64_t place_row(std::size_t row) {
    if (row == rows_.size()) {
      return std::all_of(residual_.begin(), residual_.end(), [](int c) { return c == 0; }) ? 1
                                                                                           : 0;
    }
    return choose(row, 0, rows_[row]);
  }

  std::uint64_t choose(std::size_t row, std::size_t col, int need) {
    if (need == 0) {
      auto rows_left = static_cast<int>(rows_.size() - row - 1);
      for (int c : residual_) {
        if (c > rows_left) return 0;
      }
      return place_row(row + 1);
    }
    if (residual_.size() - col < static_cast<std::size_t>(need)) return 0;
    std::uint64_t total = 0;
    if (residual_[col] > 0) {
      --residual_[col];
      total += choose(row, col + 1, need - 1);
      ++residual_[col];
    }
    total += choose(row, col + 1, need);
    return total;
  }

  std::span<const int> rows_;
  std::vector<int> residual_;
};

// conj(rows) dominates cols; both sides have equal weight by construction.
bool feasible(std::span<const int> rows, std::span<const int> cols) {
  if (cols.empty()) return rows.empty();
  if (cols.front() > static_cast<int>(rows.size())) return false;
  std::size_t p = rows.size();
  long long conj_sum = 0;
  long long col_sum = 0;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    auto level = static_cast<int>(i + 1);
    while (p > 0 && rows[p - 1] < level) --p;
    conj_sum += static_cast<long long>(p);
    col_sum += cols[i];
    if (conj_sum < col_sum) return false;
  }
  return true;
}

class GroupedCounter {
 public:
  GroupedCounter(const BinomialTable& binom, MemoTable& memo) : binom_(binom), memo_(memo) {}

  BigInt count(std::span<const int> rows, std::span<const int> cols) {
    if (rows.empty()) return BigInt(cols.empty() ? 1 : 0);
    const int r = rows.front();
    if (static_cast<int>(cols.size()) < r) return BigInt(0);
    if (!feasible(rows, cols)) return BigInt(0);
    // A single feasible row must be r columns of residual 1.
    if (rows.size() == 1) return BigInt(1);

    MemoKey key(rows, cols);
    if (auto hit = memo_.find(key)) return *hit;

    Frame frame;
    for (std::size_t i = 0; i < cols.size();) {
      std::size_t j = i;
      while (j < cols.size() && cols[j] == cols[i]) ++j;
      frame.groups.push_back({cols[i], static_cast<int>(j - i)});
      i = j;
    }
    frame.suffix_capacity.assign(frame.groups.size() + 1, 0);
    for (std::size_t g = frame.groups.size(); g-- > 0;) {
      frame.suffix_capacity[g] = frame.suffix_capacity[g + 1] + frame.groups[g].multiplicity;
    }
    frame.taken.assign(frame.groups.size(), 0);
    frame.rest = rows.subspan(1);

    BigInt total = 0;
    distribute(frame, 0, r, BigInt(1), total);
    memo_.insert(std::move(key), total);
    return total;
  }

 private:
  struct Group {
    int value;
    int multiplicity;
  };
  struct Frame {
    std::vector<Group> groups;
    std::vector<int> suffix_capacity;
    std::vector<int> taken;
    std::span<const int> rest;
  };

  // Chooses how many columns of each residual group receive a 1 in this row.
  void distribute(Frame& f, std::size_t g, int need, const BigInt& weight, BigInt& total) {
    if (need == 0) {
      std::vector<int> next;
      next.reserve(f.suffix_capacity[0]);
      for (std::size_t i = 0; i < f.groups.size(); ++i) {
        const auto [value, mult] = f.groups[i];
        const int t = i < g ? f.taken[i] : 0;
        next.insert(next.end(), static_cast<std::size_t>(mult - t), value);
        if (value > 1) next.insert(next.end(), static_cast<std::size_t>(t), value - 1);
      }
      // Lowered groups sit at or above the next group's value, so `next`
      // is already weakly decreasing.
      BigInt sub = count(f.rest, next);
      if (sgn(sub) != 0) total += weight * sub;
      return;
    }
    if (g == f.groups.size() || f.suffix_capacity[g] < need) return;
    const int mult = f.groups[g].multiplicity;
    for (int t = std::min(need, mult); t >= 0; --t) {
      if (f.suffix_capacity[g + 1] < need - t) break;
      f.taken[g] = t;
      const BigInt& c = binom_(static_cast<unsigned>(mult), static_cast<unsigned>(t));
      distribute(f, g + 1, need - t, t == 0 ? weight : BigInt(weight * c), total);
    }
    f.taken[g] = 0;
  }

  const BinomialTable& binom_;
  MemoTable& memo_;
};

}  // namespace

CountValue s_bruteforce(const Partition& alpha, const Partition& beta, std::size_t cell_limit) {
  const std::size_t cells = alpha.length() * beta.length();
  if (cells > cell_limit) {
    throw GuardExceeded("s_bruteforce: " + std::to_string(cells) + " cells exceed the limit of " +
                        std::to_string(cell_limit));
  }
  if (alpha.weight() != beta.weight()) return CountValue(0);
  BruteForce enumerator(alpha.parts(), beta.parts());
  std::uint64_t n = enumerator.run();
  CountValue out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
  return out;
}

CountValue s_count(const Partition& alpha, const Partition& beta) {
  MemoTable memo(1);
  return s_count(alpha, beta, memo);
}

CountValue s_count(const Partition& alpha, const Partition& beta, MemoTable& memo) {
  if (alpha.weight() != beta.weight()) return CountValue(0);
  const auto& binom = binomials(static_cast<unsigned>(beta.length()));
  GroupedCounter counter(binom, memo);
  return counter.count(alpha.parts(), beta.parts());
}

bool gale_ryser_feasible(const Partition& alpha, const Partition& beta) {
  return alpha.weight() == beta.weight() && dominates(transpose(alpha), beta);
}

}  // namespace pshcalc
