#include "pshcalc/coefficient_vector.hpp"

#include <algorithm>
#include <string>

#include "pshcalc/errors.hpp"

namespace pshcalc {

std::string_view to_string(Side side) { return side == Side::c ? "c" : "d"; }

CoefficientVector::CoefficientVector(int n, Side side) : n_(n), side_(side) {}

CoefficientVector::CoefficientVector(int n, Side side, Map values) : n_(n), side_(side) {
  for (auto& [alpha, value] : values) set(alpha, std::move(value));
}

CoefficientVector CoefficientVector::indicator(Side side, const Partition& alpha) {
  CoefficientVector out(alpha.weight(), side);
  out.set(alpha, BigInt(1));
  return out;
}

CoefficientVector CoefficientVector::from_dense(const PartitionIndex& index, Side side,
                                                std::span<const BigInt> values) {
  if (values.size() != index.size()) {
    throw WeightMismatch("dense vector has " + std::to_string(values.size()) +
                         " entries, expected " + std::to_string(index.size()));
  }
  CoefficientVector out(index.n(), side);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (sgn(values[i]) != 0) out.values_.emplace(index.at(i), values[i]);
  }
  return out;
}

void CoefficientVector::check_weight(const Partition& alpha) const {
  if (alpha.weight() != n_) {
    throw WeightMismatch("coefficient key " + display_partition(alpha) + " has weight " +
                         std::to_string(alpha.weight()) + ", vector has n = " +
                         std::to_string(n_));
  }
}

BigInt CoefficientVector::at(const Partition& alpha) const {
  check_weight(alpha);
  auto it = values_.find(alpha);
  return it == values_.end() ? BigInt(0) : it->second;
}

void CoefficientVector::set(const Partition& alpha, BigInt value) {
  check_weight(alpha);
  if (sgn(value) == 0) {
    values_.erase(alpha);
  } else {
    values_.insert_or_assign(alpha, std::move(value));
  }
}

bool CoefficientVector::is_nonnegative() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const auto& kv) { return sgn(kv.second) >= 0; });
}

std::vector<BigInt> CoefficientVector::dense(const PartitionIndex& index) const {
  if (index.n() != n_) {
    throw WeightMismatch("index weight " + std::to_string(index.n()) + " differs from n = " +
                         std::to_string(n_));
  }
  std::vector<BigInt> out(index.size());
  for (const auto& [alpha, value] : values_) out[index.index_of(alpha)] = value;
  return out;
}

}  // namespace pshcalc
