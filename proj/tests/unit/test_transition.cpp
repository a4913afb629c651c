#include <gtest/gtest.h>

#include <random>

#include "pshcalc/errors.hpp"
#include "pshcalc/transition.hpp"

namespace pshcalc {
namespace {

using Grid = std::vector<std::vector<long>>;

Grid to_grid(const TransitionMatrix& m) {
  Grid out(m.size(), std::vector<long>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out[i][j] = m(i, j).get_si();
  }
  return out;
}

// Frozen from an exhaustive 0-1 matrix enumeration followed by exact
// rational inversion, computed independently of this library.
const Grid kM4{{1, 0, 0, 0, 0}, {4, 1, 0, 0, 0}, {6, 2, 1, 0, 0}, {12, 5, 2, 1, 0},
               {24, 12, 6, 4, 1}};
const Grid kM4inv{{1, 0, 0, 0, 0}, {-4, 1, 0, 0, 0}, {2, -2, 1, 0, 0}, {4, -1, -2, 1, 0},
                  {-4, 4, 2, -4, 1}};
const Grid kS4{{0, 0, 0, 0, 1}, {0, 0, 0, 1, 4}, {0, 0, 1, 2, 6}, {0, 1, 2, 5, 12},
               {1, 4, 6, 12, 24}};
const Grid kM5{{1, 0, 0, 0, 0, 0, 0},      {5, 1, 0, 0, 0, 0, 0},
               {10, 3, 1, 0, 0, 0, 0},     {20, 7, 2, 1, 0, 0, 0},
               {30, 12, 5, 2, 1, 0, 0},    {60, 27, 12, 7, 3, 1, 0},
               {120, 60, 30, 20, 10, 5, 1}};
const Grid kM5inv{{1, 0, 0, 0, 0, 0, 0},    {-5, 1, 0, 0, 0, 0, 0},  {5, -3, 1, 0, 0, 0, 0},
                  {5, -1, -2, 1, 0, 0, 0},  {-5, 5, -1, -2, 1, 0, 0}, {-5, 1, 5, -1, -3, 1, 0},
                  {5, -5, -5, 5, 5, -5, 1}};

CoefficientVector vec(int n, Side side, std::initializer_list<std::pair<Partition, long>> items) {
  CoefficientVector v(n, side);
  for (const auto& [a, value] : items) v.set(a, BigInt(value));
  return v;
}

TEST(PairingMatrix, Goldens) {
  EXPECT_EQ(to_grid(pairing_matrix(1)), (Grid{{1}}));
  EXPECT_EQ(to_grid(pairing_matrix(2)), (Grid{{0, 1}, {1, 2}}));
  EXPECT_EQ(to_grid(pairing_matrix(4)), kS4);
  EXPECT_EQ(pairing_matrix(3).kind(), MatrixKind::pairing);
}

TEST(PairingMatrix, SymmetricAndMatchesCounts) {
  for (int n = 0; n <= 10; ++n) {
    auto s = pairing_matrix(n);
    const auto& order = s.order();
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        EXPECT_EQ(s(i, j), s(j, i));
        EXPECT_EQ(s(i, j), s_count(order.at(i), order.at(j)));
      }
    }
  }
}

TEST(TransitionMatrix, Goldens) {
  EXPECT_EQ(to_grid(transition_matrix(0)), (Grid{{1}}));
  EXPECT_EQ(to_grid(transition_matrix(1)), (Grid{{1}}));
  EXPECT_EQ(to_grid(transition_matrix(2)), (Grid{{1, 0}, {2, 1}}));
  EXPECT_EQ(to_grid(transition_matrix(3)), (Grid{{1, 0, 0}, {3, 1, 0}, {6, 3, 1}}));
  EXPECT_EQ(to_grid(transition_matrix(4)), kM4);
  EXPECT_EQ(to_grid(transition_matrix(5)), kM5);
}

TEST(TransitionMatrix, UnitDiagonalThroughSixteen) {
  for (int n = 0; n <= 16; ++n) {
    auto m = transition_matrix(n);
    for (std::size_t i = 0; i < m.size(); ++i) EXPECT_EQ(m(i, i), 1) << "n=" << n;
  }
}

TEST(TransitionMatrix, ColumnsAreConjugatedCounts) {
  for (int n = 0; n <= 10; ++n) {
    auto m = transition_matrix(n);
    const auto& order = m.order();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        const auto& a = order.at(i);
        const auto& b = order.at(j);
        EXPECT_EQ(m(i, j), s_count(a, transpose(b)));
        EXPECT_EQ(sgn(m(i, j)) != 0, dominates(b, a));
        EXPECT_EQ(sgn(m(i, j)) != 0, gale_ryser_feasible(a, transpose(b)));
      }
    }
  }
}

TEST(TransitionMatrix, ThreadCountAndMemoPolicyDoNotChangeResult) {
  auto reference = transition_matrix(12);
  BuildOptions threaded;
  threaded.threads = 3;
  EXPECT_EQ(transition_matrix(12, threaded), reference);
  BuildOptions cold;
  cold.memo_policy = MemoPolicy::per_cell;
  EXPECT_EQ(transition_matrix(12, cold), reference);
  MemoTable memo;
  BuildOptions external;
  external.memo = &memo;
  EXPECT_EQ(transition_matrix(12, external), reference);
  EXPECT_GT(memo.stats().entries, 0u);
  EXPECT_EQ(pairing_matrix(9, threaded), pairing_matrix(9));
}

TEST(TransitionMatrix, Guard) {
  EXPECT_THROW(transition_matrix(26), GuardExceeded);
  BuildOptions small;
  small.max_n = 4;
  EXPECT_THROW(pairing_matrix(5, small), GuardExceeded);
  EXPECT_THROW(transition_matrix(-1), std::invalid_argument);
}

TEST(Invert, Goldens) {
  EXPECT_EQ(to_grid(invert_unitriangular(transition_matrix(1))), (Grid{{1}}));
  EXPECT_EQ(to_grid(invert_unitriangular(transition_matrix(2))), (Grid{{1, 0}, {-2, 1}}));
  EXPECT_EQ(to_grid(invert_unitriangular(transition_matrix(3))),
            (Grid{{1, 0, 0}, {-3, 1, 0}, {3, -3, 1}}));
  EXPECT_EQ(to_grid(invert_unitriangular(transition_matrix(4))), kM4inv);
  EXPECT_EQ(to_grid(invert_unitriangular(transition_matrix(5))), kM5inv);
  EXPECT_EQ(invert_unitriangular(transition_matrix(3)).kind(), MatrixKind::inverse);
}

TEST(Invert, ProductIsIdentityThroughFourteen) {
  for (int n = 0; n <= 14; ++n) {
    auto m = transition_matrix(n);
    auto inv = invert_unitriangular(m);
    EXPECT_TRUE(verify_inverse(m, inv).pass()) << "n=" << n;
  }
}

TEST(Invert, RejectsCorruptInput) {
  auto m = transition_matrix(4);
  auto bad_diag = m;
  bad_diag(2, 2) = 2;
  EXPECT_THROW(invert_unitriangular(bad_diag), NotUnitriangular);
  auto bad_upper = m;
  bad_upper(0, 3) = 1;
  EXPECT_THROW(invert_unitriangular(bad_upper), NotUnitriangular);
  EXPECT_THROW(invert_unitriangular(pairing_matrix(3)), TagMismatch);
}

TEST(VerifyInverse, DetectsCorruption) {
  auto m = transition_matrix(5);
  auto inv = invert_unitriangular(m);
  inv(4, 1) += 1;
  auto report = verify_inverse(m, inv);
  EXPECT_FALSE(report.pass());
  EXPECT_FALSE(report.failures.empty());
}

TEST(DFromC, Examples) {
  auto m2 = transition_matrix(2);
  auto d = d_from_c(m2, vec(2, Side::c, {{{1, 1}, 1}}));
  EXPECT_EQ(d, vec(2, Side::d, {{{1, 1}, 1}}));
  EXPECT_EQ(d.at(Partition{2}), 0);
  EXPECT_EQ(d.side(), Side::d);

  EXPECT_TRUE(d_from_c(m2, CoefficientVector(2, Side::c)).is_zero());
}

TEST(DFromC, InducedTrivialGivesCountColumn) {
  for (int n = 0; n <= 8; ++n) {
    auto m = transition_matrix(n);
    for (const auto& a : m.order()) {
      auto d = d_from_c(m, CoefficientVector::indicator(Side::c, transpose(a)));
      for (const auto& b : m.order()) EXPECT_EQ(d.at(b), s_count(b, a));
    }
  }
}

TEST(DFromC, TagAndWeightChecks) {
  auto m = transition_matrix(3);
  EXPECT_THROW(d_from_c(m, CoefficientVector(3, Side::d)), TagMismatch);
  EXPECT_THROW(d_from_c(m, CoefficientVector(2, Side::c)), WeightMismatch);
  EXPECT_THROW(c_from_d(m, CoefficientVector(3, Side::c)), TagMismatch);
  EXPECT_THROW(d_from_c(invert_unitriangular(m), CoefficientVector(3, Side::c)), TagMismatch);
}

TEST(CFromD, Examples) {
  EXPECT_EQ(c_from_d(vec(2, Side::d, {{{2}, 1}, {{1, 1}, 1}})),
            vec(2, Side::c, {{{2}, 1}, {{1, 1}, -1}}));
  EXPECT_EQ(c_from_d(vec(3, Side::d, {{{3}, 1}, {{2, 1}, 1}, {{1, 1, 1}, 1}})),
            vec(3, Side::c, {{{3}, 1}, {{2, 1}, -2}, {{1, 1, 1}, 1}}));
  EXPECT_TRUE(c_from_d(CoefficientVector(5, Side::d)).is_zero());
}

TEST(CFromD, RoundTripsRandomVectors) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coeff(-50, 50);
  for (int n = 0; n <= 10; ++n) {
    auto m = transition_matrix(n);
    for (int trial = 0; trial < 10; ++trial) {
      CoefficientVector c(n, Side::c);
      for (const auto& a : m.order()) c.set(a, BigInt(coeff(rng)));
      EXPECT_EQ(c_from_d(m, d_from_c(m, c)), c);
      CoefficientVector d(n, Side::d);
      for (const auto& a : m.order()) d.set(a, BigInt(coeff(rng)));
      EXPECT_EQ(d_from_c(m, c_from_d(m, d)), d);
    }
  }
}

TEST(CFromD, AgreesWithExplicitInverse) {
  auto m = transition_matrix(7);
  auto inv = invert_unitriangular(m);
  for (const auto& a : m.order()) {
    auto d = CoefficientVector::indicator(Side::d, a);
    auto c = c_from_d(m, d);
    auto col = inv.apply(d.dense(m.order()));
    EXPECT_EQ(c.dense(m.order()), col);
  }
}

TEST(Wavefront, Examples) {
  auto w = wavefront(vec(2, Side::d, {{{2}, 1}, {{1, 1}, 1}}));
  EXPECT_EQ(w.partition, (Partition{2}));
  EXPECT_TRUE(w.coefficient_is_one);

  w = wavefront(vec(2, Side::d, {{{1, 1}, 1}}));
  EXPECT_EQ(w.partition, (Partition{1, 1}));
  EXPECT_TRUE(w.coefficient_is_one);

  w = wavefront(vec(4, Side::c, {{{2, 2}, 5}, {{3, 1}, -3}}));
  EXPECT_EQ(w.partition, (Partition{3, 1}));
  EXPECT_EQ(w.coefficient, -3);
  EXPECT_FALSE(w.coefficient_is_one);
}

TEST(Wavefront, Errors) {
  EXPECT_THROW(wavefront(CoefficientVector(3, Side::c)), WavefrontError);
  // (3,3) and (4,1,1) are incomparable: 3 < 4 but 6 > 5.
  auto v = vec(6, Side::d, {{{3, 3}, 1}, {{4, 1, 1}, 1}});
  EXPECT_EQ(support_maxima(v).size(), 2u);
  EXPECT_THROW(wavefront(v), WavefrontError);
}

TEST(Wavefront, IndicatorsKeepTheirWavefront) {
  for (int n = 0; n <= 10; ++n) {
    auto m = transition_matrix(n);
    for (const auto& a : m.order()) {
      auto c = CoefficientVector::indicator(Side::c, a);
      auto wd = wavefront(d_from_c(m, c));
      EXPECT_EQ(wd.partition, a);
      EXPECT_TRUE(wd.coefficient_is_one);
    }
  }
}

TEST(VerifyTriangular, PassesThroughFourteen) {
  for (int n = 0; n <= 14; ++n) EXPECT_TRUE(verify_triangular(transition_matrix(n)).pass());
}

TEST(VerifyTriangular, NegativeControls) {
  auto m = transition_matrix(5);

  auto diag = m;
  diag(3, 3) = 2;
  auto report = verify_triangular(diag);
  EXPECT_FALSE(report.pass());
  EXPECT_FALSE(report.diagonal_ok);
  ASSERT_EQ(report.failures.size(), 1u);
  EXPECT_EQ(report.failures[0].row, (Partition{3, 1, 1}));
  EXPECT_EQ(report.failures[0].reason, TriangularityFailure::Reason::diagonal_not_one);

  auto outside = m;
  outside(1, 4) = 7;
  report = verify_triangular(outside);
  EXPECT_FALSE(report.zeros_ok);
  EXPECT_TRUE(report.diagonal_ok);

  auto inside = m;
  inside(4, 0) = 0;
  report = verify_triangular(inside);
  EXPECT_FALSE(report.positivity_ok);
  EXPECT_NE(describe(report.failures[0]).find("(2,2,1)"), std::string::npos);

  EXPECT_THROW(verify_triangular(pairing_matrix(3)), TagMismatch);
}

TEST(MatrixKind, TextForms) {
  for (auto kind : {MatrixKind::pairing, MatrixKind::transition, MatrixKind::inverse}) {
    EXPECT_EQ(parse_matrix_kind(to_string(kind)), kind);
  }
  EXPECT_THROW(parse_matrix_kind("X"), ParseError);
}

}  // namespace
}  // namespace pshcalc
