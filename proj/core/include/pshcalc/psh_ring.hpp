#pragma once

#include <map>
#include <string_view>

#include "pshcalc/bigint.hpp"
#include "pshcalc/bipartite_count.hpp"
#include "pshcalc/coefficient_vector.hpp"
#include "pshcalc/partition.hpp"

namespace pshcalc {

/// Product bases of R_n: x_alpha (from trivial classes) and y_alpha (from
/// Steinberg classes).
enum class Basis { X, Y };

std::string_view to_string(Basis basis);

/// Element of R_n written in one of the two product bases. Coefficients may
/// be negative; zero coefficients are not stored.
class PshVector {
 public:
  using Map = std::map<Partition, BigInt, CanonicalLess>;

  PshVector(int n, Basis basis);
  /// Throws WeightMismatch if a key does not have weight n.
  PshVector(int n, Basis basis, Map coeffs);

  int n() const { return n_; }
  Basis basis() const { return basis_; }
  const Map& coeffs() const { return coeffs_; }
  BigInt coeff(const Partition& alpha) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add_to(const Partition& alpha, const BigInt& delta);

  PshVector& operator+=(const PshVector& other);
  PshVector& operator-=(const PshVector& other);
  PshVector& operator*=(const BigInt& scalar);

  friend PshVector operator+(PshVector a, const PshVector& b) { return a += b; }
  friend PshVector operator-(PshVector a, const PshVector& b) { return a -= b; }
  friend PshVector operator*(const BigInt& scalar, PshVector v) { return v *= scalar; }
  friend bool operator==(const PshVector&, const PshVector&) = default;

 private:
  void require_compatible(const PshVector& other) const;

  int n_;
  Basis basis_;
  Map coeffs_;
};

/// Unit vector x_alpha or y_alpha. The empty partition gives the identity of R_0.
PshVector basis_element(Basis basis, const Partition& alpha);

/// Induction product: x_alpha * x_beta = x_{sort(alpha ++ beta)}, extended
/// bilinearly; same rule for Y. Throws TagMismatch across bases.
PshVector multiply(const PshVector& u, const PshVector& v);
inline PshVector operator*(const PshVector& u, const PshVector& v) { return multiply(u, v); }

/// <u, v> with <x_alpha, y_beta> = s(alpha, beta). Accepts the arguments in
/// either order but needs one X and one Y vector (TagMismatch otherwise) of
/// equal weight (WeightMismatch otherwise).
BigInt pair(const PshVector& u, const PshVector& v);
BigInt pair(const PshVector& u, const PshVector& v, MemoTable& memo);

/// Module class in the X basis from character coefficients: coefficient c_alpha
/// sits on x_{transpose(alpha)}. Throws TagMismatch for a d-side vector.
PshVector vector_from_c(const CoefficientVector& c);

/// d_alpha = <v, y_alpha>.
BigInt d_by_pairing(const PshVector& v, const Partition& alpha);

}  // namespace pshcalc
