#include "pshcalc/transition.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

#include "pshcalc/errors.hpp"

namespace pshcalc {

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::pairing:
      return "S";
    case MatrixKind::transition:
      return "M";
    case MatrixKind::inverse:
      return "Minv";
  }
  return "?";
}

MatrixKind parse_matrix_kind(std::string_view text) {
  if (text == "S") return MatrixKind::pairing;
  if (text == "M") return MatrixKind::transition;
  if (text == "Minv") return MatrixKind::inverse;
  throw ParseError("unknown matrix kind \"" + std::string(text) + "\" (expected S, M or Minv)");
}

TransitionMatrix::TransitionMatrix(std::shared_ptr<const PartitionIndex> order, MatrixKind kind)
    : order_(std::move(order)), kind_(kind), entries_(order_->size() * order_->size()) {}

TransitionMatrix::TransitionMatrix(std::shared_ptr<const PartitionIndex> order, MatrixKind kind,
                                   std::vector<BigInt> entries)
    : order_(std::move(order)), kind_(kind), entries_(std::move(entries)) {
  if (entries_.size() != order_->size() * order_->size()) {
    throw WeightMismatch("matrix needs " + std::to_string(order_->size() * order_->size()) +
                         " entries, got " + std::to_string(entries_.size()));
  }
}

const BigInt& TransitionMatrix::at(const Partition& row, const Partition& col) const {
  return (*this)(order_->index_of(row), order_->index_of(col));
}

std::vector<BigInt> TransitionMatrix::apply(std::span<const BigInt> v) const {
  const std::size_t p = size();
  if (v.size() != p) {
    throw WeightMismatch("vector length " + std::to_string(v.size()) + " does not match " +
                         std::to_string(p));
  }
  std::vector<BigInt> out(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const BigInt& a = (*this)(i, j);
      if (sgn(a) != 0 && sgn(v[j]) != 0) out[i] += a * v[j];
    }
  }
  return out;
}

std::size_t TransitionMatrix::max_bit_length() const {
  std::size_t best = 0;
  for (const auto& e : entries_) best = std::max(best, bit_length(e));
  return best;
}

bool operator==(const TransitionMatrix& a, const TransitionMatrix& b) {
  return a.kind_ == b.kind_ && a.n() == b.n() && a.entries_ == b.entries_;
}

std::vector<BigInt> multiply(const TransitionMatrix& a, const TransitionMatrix& b) {
  if (a.n() != b.n()) {
    throw WeightMismatch("cannot multiply matrices over P(" + std::to_string(a.n()) +
                         ") and P(" + std::to_string(b.n()) + ")");
  }
  const std::size_t p = a.size();
  std::vector<BigInt> out(p * p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < p; ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < p; ++j) {
        const BigInt& bkj = b(k, j);
        if (sgn(bkj) != 0) out[i * p + j] += aik * bkj;
      }
    }
  }
  return out;
}

namespace {

void check_guard(int n, int max_n) {
  if (n < 0) throw std::invalid_argument("matrix weight must be nonnegative");
  if (n > max_n) {
    throw GuardExceeded("n = " + std::to_string(n) + " exceeds max_n = " + std::to_string(max_n));
  }
}

using CellFn = std::function<BigInt(std::size_t row, std::size_t col, MemoTable* memo)>;

// Rows are handed out dynamically; every cell is written by exactly one
// worker, so the result does not depend on the thread count.
void fill(TransitionMatrix& out, const BuildOptions& options, const CellFn& cell) {
  const std::size_t p = out.size();
  std::unique_ptr<MemoTable> owned;
  MemoTable* memo = nullptr;
  if (options.memo_policy == MemoPolicy::shared) {
    memo = options.memo;
    if (memo == nullptr) {
      owned = std::make_unique<MemoTable>();
      memo = owned.get();
    }
  }

  std::atomic<std::size_t> next_row{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t row = next_row++; row < p; row = next_row++) {
        for (std::size_t col = 0; col < p; ++col) out(row, col) = cell(row, col, memo);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next_row = p;
    }
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
}

BigInt count_with(const Partition& a, const Partition& b, MemoTable* memo) {
  return memo ? s_count(a, b, *memo) : s_count(a, b);
}

}  // namespace

TransitionMatrix pairing_matrix(int n, const BuildOptions& options) {
  check_guard(n, options.max_n);
  TransitionMatrix out(make_index(n, std::max(options.max_n, n)), MatrixKind::pairing);
  const auto& order = out.order();
  std::vector<Partition> conjugates;
  conjugates.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    conjugates.push_back(order.at(order.transpose_index(i)));
  }
  fill(out, options, [&](std::size_t row, std::size_t col, MemoTable* memo) {
    if (!dominates(conjugates[row], order.at(col))) return BigInt(0);
    return count_with(order.at(row), order.at(col), memo);
  });
  return out;
}

TransitionMatrix transition_matrix(int n, const BuildOptions& options) {
  check_guard(n, options.max_n);
  TransitionMatrix out(make_index(n, std::max(options.max_n, n)), MatrixKind::transition);
  const auto& order = out.order();
  fill(out, options, [&](std::size_t row, std::size_t col, MemoTable* memo) {
    // Canonical order refines dominance, so col > row can never dominate.
    if (col > row || !dominates(order.at(col), order.at(row))) return BigInt(0);
    return count_with(order.at(row), order.at(order.transpose_index(col)), memo);
  });
  return out;
}

namespace {

void require_unitriangular(const TransitionMatrix& m) {
  if (m.kind() != MatrixKind::transition) {
    throw TagMismatch("expected a transition matrix (kind M), got kind " +
                      std::string(to_string(m.kind())));
  }
  const auto& order = m.order();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m(i, i) != 1) {
      throw NotUnitriangular("diagonal entry at " + display_partition(order.at(i)) + " is " +
                             to_decimal(m(i, i)) + ", expected 1");
    }
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (sgn(m(i, j)) != 0) {
        throw NotUnitriangular("entry (" + display_partition(order.at(i)) + ", " +
                               display_partition(order.at(j)) + ") above the diagonal is " +
                               to_decimal(m(i, j)));
      }
    }
  }
}

}  // namespace

TransitionMatrix invert_unitriangular(const TransitionMatrix& m) {
  require_unitriangular(m);
  const std::size_t p = m.size();
  TransitionMatrix inv(m.shared_order(), MatrixKind::inverse);
  BigInt acc;
  for (std::size_t i = 0; i < p; ++i) {
    inv(i, i) = 1;
    for (std::size_t j = 0; j < i; ++j) {
      acc = 0;
      for (std::size_t k = j; k < i; ++k) {
        const BigInt& mik = m(i, k);
        if (sgn(mik) == 0) continue;
        const BigInt& xkj = inv(k, j);
        if (sgn(xkj) != 0) acc += mik * xkj;
      }
      inv(i, j) = -acc;
    }
  }
  return inv;
}

CoefficientVector d_from_c(const TransitionMatrix& m, const CoefficientVector& c) {
  if (m.kind() != MatrixKind::transition) throw TagMismatch("d_from_c needs kind M");
  if (c.side() != Side::c) throw TagMismatch("d_from_c: input must be a c-side vector");
  if (c.n() != m.n()) {
    throw WeightMismatch("vector over P(" + std::to_string(c.n()) + ") against M(" +
                         std::to_string(m.n()) + ")");
  }
  auto d = m.apply(c.dense(m.order()));
  return CoefficientVector::from_dense(m.order(), Side::d, d);
}

CoefficientVector d_from_c(const CoefficientVector& c, const BuildOptions& options) {
  return d_from_c(transition_matrix(c.n(), options), c);
}

CoefficientVector c_from_d(const TransitionMatrix& m, const CoefficientVector& d) {
  if (d.side() != Side::d) throw TagMismatch("c_from_d: input must be a d-side vector");
  if (d.n() != m.n()) {
    throw WeightMismatch("vector over P(" + std::to_string(d.n()) + ") against M(" +
                         std::to_string(m.n()) + ")");
  }
  require_unitriangular(m);
  auto c = d.dense(m.order());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      const BigInt& mik = m(i, k);
      if (sgn(mik) != 0 && sgn(c[k]) != 0) c[i] -= mik * c[k];
    }
  }
  return CoefficientVector::from_dense(m.order(), Side::c, c);
}

CoefficientVector c_from_d(const CoefficientVector& d, const BuildOptions& options) {
  return c_from_d(transition_matrix(d.n(), options), d);
}

std::vector<Partition> support_maxima(const CoefficientVector& v) {
  std::vector<Partition> support;
  for (const auto& [alpha, value] : v.values()) support.push_back(alpha);
  std::vector<Partition> maxima;
  for (const auto& a : support) {
    bool dominated = std::any_of(support.begin(), support.end(), [&](const Partition& b) {
      return !(a == b) && dominates(b, a);
    });
    if (!dominated) maxima.push_back(a);
  }
  return maxima;
}

WavefrontReport wavefront(const CoefficientVector& v) {
  if (v.is_zero()) throw WavefrontError("wavefront: the zero vector has empty support");
  auto maxima = support_maxima(v);
  if (maxima.size() != 1) {
    std::string list;
    for (const auto& m : maxima) list += (list.empty() ? "" : " ") + display_partition(m);
    throw WavefrontError("wavefront: incomparable maximal support elements " + list);
  }
  WavefrontReport report{maxima.front(), v.at(maxima.front()), false};
  report.coefficient_is_one = report.coefficient == 1;
  return report;
}

std::string describe(const TriangularityFailure& failure) {
  std::string where = "(" + display_partition(failure.row) + ", " +
                      display_partition(failure.col) + ") = " + to_decimal(failure.value);
  switch (failure.reason) {
    case TriangularityFailure::Reason::diagonal_not_one:
      return "diagonal entry " + where + ", expected 1";
    case TriangularityFailure::Reason::nonzero_outside_support:
      return "entry " + where + " but the column does not dominate the row";
    case TriangularityFailure::Reason::zero_inside_support:
      return "entry " + where + " but the column dominates the row";
  }
  return where;
}

TriangularityReport verify_triangular(const TransitionMatrix& m) {
  if (m.kind() != MatrixKind::transition) {
    throw TagMismatch("verify_triangular needs kind M, got " + std::string(to_string(m.kind())));
  }
  using Reason = TriangularityFailure::Reason;
  TriangularityReport report;
  const auto& order = m.order();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const BigInt& value = m(i, j);
      const auto& row = order.at(i);
      const auto& col = order.at(j);
      if (i == j) {
        if (value != 1) {
          report.diagonal_ok = false;
          report.failures.push_back({Reason::diagonal_not_one, row, col, value});
        }
      } else if (dominates(col, row)) {
        if (sgn(value) <= 0) {
          report.positivity_ok = false;
          report.failures.push_back({Reason::zero_inside_support, row, col, value});
        }
      } else if (sgn(value) != 0) {
        report.zeros_ok = false;
        report.failures.push_back({Reason::nonzero_outside_support, row, col, value});
      }
    }
  }
  return report;
}

InverseReport verify_inverse(const TransitionMatrix& m, const TransitionMatrix& inverse) {
  InverseReport report;
  const auto& order = m.order();
  const std::size_t p = m.size();
  for (std::size_t i = 0; i < p; ++i) {
    if (inverse(i, i) != 1) {
      report.unit_diagonal = false;
      report.failures.push_back("inverse diagonal at " + display_partition(order.at(i)) + " is " +
                                to_decimal(inverse(i, i)));
    }
  }
  auto check = [&](const std::vector<BigInt>& prod, bool& flag, const char* label) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        if (prod[i * p + j] != (i == j ? 1 : 0)) {
          flag = false;
          report.failures.push_back(std::string(label) + " differs from I at (" +
                                    display_partition(order.at(i)) + ", " +
                                    display_partition(order.at(j)) + ")");
          return;
        }
      }
    }
  };
  check(multiply(m, inverse), report.left_identity, "M*Minv");
  check(multiply(inverse, m), report.right_identity, "Minv*M");
  return report;
}

}  // namespace pshcalc
