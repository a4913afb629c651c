#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pshcalc {

/// Guard applied to partitions_of when the caller does not pass one.
inline constexpr int kPartitionMaxN = 40;

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the unique partition of weight 0. Immutable after construction.
class Partition {
 public:
  Partition() = default;

  /// Throws std::invalid_argument unless `parts` is weakly decreasing and
  /// strictly positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Sorts positive `parts` into weakly decreasing order first.
  static Partition from_unsorted(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Part at position i, or 0 past the end (zero padding).
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// An ordered sequence of positive integers.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  std::size_t length() const { return parts_.size(); }

  /// The partition obtained by sorting the parts.
  Partition sorted() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Orders by weight, then descending lexicographic within a weight. Within
/// one weight this is the canonical order: (n) first, (1,…,1) last.
struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const noexcept;
};

/// All partitions of n in canonical order. Throws GuardExceeded if n > max_n
/// and std::invalid_argument if n < 0.
std::vector<Partition> partitions_of(int n, int max_n = kPartitionMaxN);

/// Conjugate partition: i-th part counts the parts of `alpha` that are >= i.
Partition transpose(const Partition& alpha);

/// Dominance order. Throws WeightMismatch if the weights differ.
bool dominates(const Partition& alpha, const Partition& beta);

/// Partitions covered by `alpha` in the dominance order (Hasse diagram
/// edges pointing down), in canonical order.
std::vector<Partition> covered_by(const Partition& alpha);

/// Bijection between P(n) and {0, …, p(n)-1} following canonical order.
class PartitionIndex {
 public:
  explicit PartitionIndex(int n, int max_n = kPartitionMaxN);

  int n() const { return n_; }
  std::size_t size() const { return partitions_.size(); }
  const Partition& at(std::size_t i) const { return partitions_.at(i); }
  const std::vector<Partition>& partitions() const { return partitions_; }
  auto begin() const { return partitions_.begin(); }
  auto end() const { return partitions_.end(); }

  /// Throws WeightMismatch for a partition of another weight.
  std::size_t index_of(const Partition& alpha) const;

  /// index_of(transpose(at(i))).
  std::size_t transpose_index(std::size_t i) const { return transpose_.at(i); }

 private:
  int n_;
  std::vector<Partition> partitions_;
  std::unordered_map<Partition, std::size_t, PartitionHash> lookup_;
  std::vector<std::size_t> transpose_;
};

/// Shared, immutable index for weight n.
std::shared_ptr<const PartitionIndex> make_index(int n, int max_n = kPartitionMaxN);

enum class ParseMode { strict, lenient };

/// Parses "3,2,1" (surrounding parentheses and blanks are tolerated). The
/// empty string is the empty partition. Strict mode rejects parts that are
/// not weakly decreasing; lenient mode sorts them. Throws ParseError.
Partition parse_partition(std::string_view text, ParseMode mode = ParseMode::strict);

/// "3,2,1"; the empty partition formats as "".
std::string format_partition(const Partition& alpha);

/// "(3,2,1)"; the empty partition formats as "()".
std::string display_partition(const Partition& alpha);

}  // namespace pshcalc
