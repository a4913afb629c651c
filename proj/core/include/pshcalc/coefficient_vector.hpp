#pragma once

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "pshcalc/bigint.hpp"
#include "pshcalc/partition.hpp"

namespace pshcalc {

/// Character-expansion coefficients (c) or degenerate Whittaker dimensions (d).
enum class Side { c, d };

std::string_view to_string(Side side);

/// Sparse exact-integer vector over P(n), tagged with its side. Zero entries
/// are never stored, so two vectors compare equal iff they agree everywhere.
class CoefficientVector {
 public:
  using Map = std::map<Partition, BigInt, CanonicalLess>;

  CoefficientVector(int n, Side side);
  /// Throws WeightMismatch if a key does not have weight n.
  CoefficientVector(int n, Side side, Map values);

  static CoefficientVector indicator(Side side, const Partition& alpha);
  static CoefficientVector from_dense(const PartitionIndex& index, Side side,
                                      std::span<const BigInt> values);

  int n() const { return n_; }
  Side side() const { return side_; }
  const Map& values() const { return values_; }

  /// Coefficient at alpha (zero when absent). Throws WeightMismatch.
  BigInt at(const Partition& alpha) const;
  void set(const Partition& alpha, BigInt value);

  bool is_zero() const { return values_.empty(); }
  /// Whittaker dimensions of a representation are never negative.
  bool is_nonnegative() const;

  /// Values in the index's canonical order.
  std::vector<BigInt> dense(const PartitionIndex& index) const;

  friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

 private:
  void check_weight(const Partition& alpha) const;

  int n_;
  Side side_;
  Map values_;
};

}  // namespace pshcalc
