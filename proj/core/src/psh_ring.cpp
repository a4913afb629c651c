#include "pshcalc/psh_ring.hpp"

#include <string>
#include <vector>

#include "pshcalc/errors.hpp"

namespace pshcalc {

std::string_view to_string(Basis basis) { return basis == Basis::X ? "X" : "Y"; }

PshVector::PshVector(int n, Basis basis) : n_(n), basis_(basis) {}

PshVector::PshVector(int n, Basis basis, Map coeffs) : n_(n), basis_(basis) {
  for (const auto& [alpha, value] : coeffs) add_to(alpha, value);
}

BigInt PshVector::coeff(const Partition& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void PshVector::add_to(const Partition& alpha, const BigInt& delta) {
  if (alpha.weight() != n_) {
    throw WeightMismatch("basis key " + display_partition(alpha) + " does not have weight " +
                         std::to_string(n_));
  }
  if (sgn(delta) == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(alpha, delta);
  if (!inserted) {
    it->second += delta;
    if (sgn(it->second) == 0) coeffs_.erase(it);
  }
}

void PshVector::require_compatible(const PshVector& other) const {
  if (basis_ != other.basis_) throw TagMismatch("vectors are written in different bases");
  if (n_ != other.n_) {
    throw WeightMismatch("cannot add vectors of weight " + std::to_string(n_) + " and " +
                         std::to_string(other.n_));
  }
}

PshVector& PshVector::operator+=(const PshVector& other) {
  require_compatible(other);
  for (const auto& [alpha, value] : other.coeffs_) add_to(alpha, value);
  return *this;
}

PshVector& PshVector::operator-=(const PshVector& other) {
  require_compatible(other);
  for (const auto& [alpha, value] : other.coeffs_) add_to(alpha, -value);
  return *this;
}

PshVector& PshVector::operator*=(const BigInt& scalar) {
  if (sgn(scalar) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [alpha, value] : coeffs_) value *= scalar;
  return *this;
}

PshVector basis_element(Basis basis, const Partition& alpha) {
  PshVector out(alpha.weight(), basis);
  out.add_to(alpha, BigInt(1));
  return out;
}

PshVector multiply(const PshVector& u, const PshVector& v) {
  if (u.basis() != v.basis()) {
    throw TagMismatch("multiply: cannot multiply an X-basis vector with a Y-basis vector");
  }
  PshVector out(u.n() + v.n(), u.basis());
  for (const auto& [alpha, a] : u.coeffs()) {
    for (const auto& [beta, b] : v.coeffs()) {
      std::vector<int> parts(alpha.parts().begin(), alpha.parts().end());
      parts.insert(parts.end(), beta.parts().begin(), beta.parts().end());
      out.add_to(Partition::from_unsorted(std::move(parts)), a * b);
    }
  }
  return out;
}

BigInt pair(const PshVector& u, const PshVector& v, MemoTable& memo) {
  if (u.basis() == v.basis()) {
    throw TagMismatch("pair: needs one X-basis and one Y-basis vector");
  }
  if (u.basis() == Basis::Y) return pair(v, u, memo);
  if (u.n() != v.n()) {
    throw WeightMismatch("pair: weights " + std::to_string(u.n()) + " and " +
                         std::to_string(v.n()) + " differ");
  }
  BigInt total = 0;
  for (const auto& [alpha, a] : u.coeffs()) {
    for (const auto& [beta, b] : v.coeffs()) {
      if (!gale_ryser_feasible(alpha, beta)) continue;
      total += a * b * s_count(alpha, beta, memo);
    }
  }
  return total;
}

BigInt pair(const PshVector& u, const PshVector& v) {
  MemoTable memo(1);
  return pair(u, v, memo);
}

PshVector vector_from_c(const CoefficientVector& c) {
  if (c.side() != Side::c) throw TagMismatch("vector_from_c: expected a c-side vector");
  PshVector out(c.n(), Basis::X);
  for (const auto& [alpha, value] : c.values()) out.add_to(transpose(alpha), value);
  return out;
}

BigInt d_by_pairing(const PshVector& v, const Partition& alpha) {
  return pair(v, basis_element(Basis::Y, alpha));
}

}  // namespace pshcalc
