#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pshcalc/bigint.hpp"
#include "pshcalc/bipartite_count.hpp"
#include "pshcalc/coefficient_vector.hpp"
#include "pshcalc/partition.hpp"

namespace pshcalc {

/// Default guard for dense matrix construction (p(25) = 1958).
inline constexpr int kMatrixMaxN = 25;

/// pairing: S[a][b] = s(a, b). transition: M[a][b] = s(a, b^t).
/// inverse: the exact inverse of a transition matrix.
enum class MatrixKind { pairing, transition, inverse };

/// "S", "M" or "Minv".
std::string_view to_string(MatrixKind kind);
/// Throws ParseError for anything but "S", "M" or "Minv".
MatrixKind parse_matrix_kind(std::string_view text);

/// Dense p(n) x p(n) exact-integer matrix, rows and columns in canonical order.
class TransitionMatrix {
 public:
  TransitionMatrix(std::shared_ptr<const PartitionIndex> order, MatrixKind kind);
  TransitionMatrix(std::shared_ptr<const PartitionIndex> order, MatrixKind kind,
                   std::vector<BigInt> entries);

  int n() const { return order_->n(); }
  MatrixKind kind() const { return kind_; }
  const PartitionIndex& order() const { return *order_; }
  std::shared_ptr<const PartitionIndex> shared_order() const { return order_; }
  std::size_t size() const { return order_->size(); }

  const BigInt& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * size() + col];
  }
  BigInt& operator()(std::size_t row, std::size_t col) { return entries_[row * size() + col]; }
  const BigInt& at(const Partition& row, const Partition& col) const;

  std::span<const BigInt> entries() const { return entries_; }

  /// this * v for a dense vector in canonical order.
  std::vector<BigInt> apply(std::span<const BigInt> v) const;

  /// Largest bit length of any entry.
  std::size_t max_bit_length() const;

  friend bool operator==(const TransitionMatrix& a, const TransitionMatrix& b);

 private:
  std::shared_ptr<const PartitionIndex> order_;
  MatrixKind kind_;
  std::vector<BigInt> entries_;
};

/// Exact product as a plain row-major vector; shapes must agree.
std::vector<BigInt> multiply(const TransitionMatrix& a, const TransitionMatrix& b);

enum class MemoPolicy {
  per_cell,  // every cell gets a private table (cold)
  shared,    // one table for the whole fill
};

struct BuildOptions {
  int max_n = kMatrixMaxN;
  unsigned threads = 1;
  MemoPolicy memo_policy = MemoPolicy::shared;
  /// Used with MemoPolicy::shared instead of a fresh table when set.
  MemoTable* memo = nullptr;
};

/// S(n). Cells outside the Gale–Ryser support are filled with 0 directly.
TransitionMatrix pairing_matrix(int n, const BuildOptions& options = {});

/// M(n); lower unitriangular in canonical order. Only cells with b
/// dominating a are counted, the rest are structurally 0.
TransitionMatrix transition_matrix(int n, const BuildOptions& options = {});

/// Forward substitution. Throws TagMismatch unless `m` is a transition
/// matrix and NotUnitriangular if the diagonal is not all 1 or an entry above
/// it is nonzero.
TransitionMatrix invert_unitriangular(const TransitionMatrix& m);

/// d = M c. Throws TagMismatch for a d-side input, WeightMismatch if n differs.
CoefficientVector d_from_c(const TransitionMatrix& m, const CoefficientVector& c);
CoefficientVector d_from_c(const CoefficientVector& c, const BuildOptions& options = {});

/// c = M^{-1} d, solved by forward substitution against M.
CoefficientVector c_from_d(const TransitionMatrix& m, const CoefficientVector& d);
CoefficientVector c_from_d(const CoefficientVector& d, const BuildOptions& options = {});

struct WavefrontReport {
  Partition partition;
  BigInt coefficient;
  bool coefficient_is_one = false;
};

/// Unique dominance-maximal element of the support. Throws WavefrontError for
/// the zero vector or when the maximal elements are not unique.
WavefrontReport wavefront(const CoefficientVector& v);

/// Dominance-maximal elements of the support, canonical order.
std::vector<Partition> support_maxima(const CoefficientVector& v);

struct TriangularityFailure {
  enum class Reason { diagonal_not_one, nonzero_outside_support, zero_inside_support };
  Reason reason;
  Partition row;
  Partition col;
  BigInt value;
};

std::string describe(const TriangularityFailure& failure);

struct TriangularityReport {
  bool diagonal_ok = true;
  bool zeros_ok = true;
  bool positivity_ok = true;
  std::vector<TriangularityFailure> failures;

  bool pass() const { return diagonal_ok && zeros_ok && positivity_ok; }
};

/// Checks unit diagonal, M[a][b] = 0 unless b dominates a, and M[a][b] > 0
/// when it does. Throws TagMismatch unless `m` is a transition matrix.
TriangularityReport verify_triangular(const TransitionMatrix& m);

struct InverseReport {
  bool left_identity = true;   // M * Minv
  bool right_identity = true;  // Minv * M
  bool unit_diagonal = true;
  std::vector<std::string> failures;

  bool pass() const { return left_identity && right_identity && unit_diagonal; }
};

InverseReport verify_inverse(const TransitionMatrix& m, const TransitionMatrix& inverse);

}  // namespace pshcalc
