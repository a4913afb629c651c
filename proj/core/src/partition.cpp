#include "pshcalc/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "pshcalc/errors.hpp"

namespace pshcalc {

namespace {

bool is_weakly_decreasing(std::span<const int> parts) {
  return std::adjacent_find(parts.begin(), parts.end(), std::less<>{}) == parts.end();
}

void require_positive(std::span<const int> parts, const char* what) {
  if (std::any_of(parts.begin(), parts.end(), [](int p) { return p <= 0; })) {
    throw std::invalid_argument(std::string(what) + " parts must be positive");
  }
}

int checked_sum(std::span<const int> parts) {
  long long total = std::accumulate(parts.begin(), parts.end(), 0LL);
  if (total > std::numeric_limits<int>::max()) {
    throw std::invalid_argument("partition weight overflows int");
  }
  return static_cast<int>(total);
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_positive(parts_, "partition");
  if (!is_weakly_decreasing(parts_)) {
    throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = checked_sum(parts_);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  return Partition(std::move(parts));
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  require_positive(parts_, "composition");
  weight_ = checked_sum(parts_);
}

Partition Composition::sorted() const { return Partition::from_unsorted(parts_); }

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = p.length();
  for (int part : p.parts()) {
    h ^= std::hash<int>{}(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool CanonicalLess::operator()(const Partition& a, const Partition& b) const noexcept {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  auto pa = a.parts();
  auto pb = b.parts();
  return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

std::vector<Partition> partitions_of(int n, int max_n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  if (n > max_n) {
    throw GuardExceeded("partitions_of: n = " + std::to_string(n) + " exceeds max_n = " +
                        std::to_string(max_n));
  }
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Descending lexicographic successor: lower the last part > 1 by one and
  // refill the tail greedily with parts no larger than it.
  std::vector<int> cur{n};
  while (true) {
    out.emplace_back(cur);
    int ones = 0;
    while (!cur.empty() && cur.back() == 1) {
      cur.pop_back();
      ++ones;
    }
    if (cur.empty()) break;
    int pivot = --cur.back();
    int rest = ones + 1;
    while (rest > 0) {
      int take = std::min(pivot, rest);
      cur.push_back(take);
      rest -= take;
    }
  }
  return out;
}

Partition transpose(const Partition& alpha) {
  std::vector<int> out(static_cast<std::size_t>(alpha.largest()), 0);
  for (int part : alpha.parts()) {
    for (int i = 0; i < part; ++i) ++out[static_cast<std::size_t>(i)];
  }
  return Partition(std::move(out));
}

bool dominates(const Partition& alpha, const Partition& beta) {
  if (alpha.weight() != beta.weight()) {
    throw WeightMismatch("dominates: weights " + std::to_string(alpha.weight()) + " and " +
                         std::to_string(beta.weight()) + " are incomparable");
  }
  int sa = 0;
  int sb = 0;
  std::size_t len = std::max(alpha.length(), beta.length());
  for (std::size_t i = 0; i < len; ++i) {
    sa += alpha.part(i);
    sb += beta.part(i);
    if (sa < sb) return false;
  }
  return true;
}

std::vector<Partition> covered_by(const Partition& alpha) {
  // Covers are single-box moves from row i down to row j that either go to
  // the adjacent row or bridge rows whose lengths differ by exactly two.
  std::vector<Partition> out;
  std::vector<int> padded(alpha.parts().begin(), alpha.parts().end());
  padded.push_back(0);
  for (std::size_t i = 0; i + 1 < padded.size(); ++i) {
    for (std::size_t j = i + 1; j < padded.size(); ++j) {
      if (j != i + 1 && padded[i] - padded[j] != 2) continue;
      std::vector<int> moved = padded;
      --moved[i];
      ++moved[j];
      if (!is_weakly_decreasing(moved)) continue;
      while (!moved.empty() && moved.back() == 0) moved.pop_back();
      out.emplace_back(std::move(moved));
    }
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PartitionIndex::PartitionIndex(int n, int max_n) : n_(n), partitions_(partitions_of(n, max_n)) {
  lookup_.reserve(partitions_.size());
  for (std::size_t i = 0; i < partitions_.size(); ++i) lookup_.emplace(partitions_[i], i);
  transpose_.reserve(partitions_.size());
  for (const auto& p : partitions_) transpose_.push_back(lookup_.at(transpose(p)));
}

std::size_t PartitionIndex::index_of(const Partition& alpha) const {
  if (alpha.weight() != n_) {
    throw WeightMismatch("partition " + display_partition(alpha) + " has weight " +
                         std::to_string(alpha.weight()) + ", expected " + std::to_string(n_));
  }
  return lookup_.at(alpha);
}

std::shared_ptr<const PartitionIndex> make_index(int n, int max_n) {
  return std::make_shared<const PartitionIndex>(n, max_n);
}

Partition parse_partition(std::string_view text, ParseMode mode) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') {
    body = trim(body.substr(1, body.size() - 2));
  }
  if (body.empty()) return Partition{};

  std::vector<int> parts;
  while (true) {
    auto comma = body.find(',');
    std::string_view token = trim(body.substr(0, comma));
    if (token.empty()) throw ParseError("partition \"" + std::string(text) + "\": empty part");
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("partition \"" + std::string(text) + "\": bad part \"" +
                       std::string(token) + "\"");
    }
    if (value <= 0) {
      throw ParseError("partition \"" + std::string(text) + "\": parts must be positive");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (!is_weakly_decreasing(parts)) {
    if (mode == ParseMode::strict) {
      throw ParseError("partition \"" + std::string(text) + "\": parts are not weakly decreasing");
    }
    std::sort(parts.begin(), parts.end(), std::greater<>{});
  }
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_partition(const Partition& alpha) {
  std::string out;
  for (std::size_t i = 0; i < alpha.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(alpha.part(i));
  }
  return out;
}

std::string display_partition(const Partition& alpha) {
  return "(" + format_partition(alpha) + ")";
}

}  // namespace pshcalc
