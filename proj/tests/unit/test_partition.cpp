#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pshcalc/errors.hpp"
#include "pshcalc/partition.hpp"

namespace pshcalc {
namespace {

std::vector<int> as_vector(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

TEST(Partition, ConstructionValidates) {
  EXPECT_THROW(Partition({1, 3}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  EXPECT_THROW(Partition({-1}), std::invalid_argument);
  Partition p{3, 3, 1};
  EXPECT_EQ(p.weight(), 7);
  EXPECT_EQ(p.length(), 3u);
  EXPECT_EQ(p.part(5), 0);
  EXPECT_EQ(Partition{}.weight(), 0);
  EXPECT_EQ(Partition::from_unsorted({1, 3, 2}), (Partition{3, 2, 1}));
}

TEST(Composition, SortsIntoPartition) {
  Composition c{1, 3, 1, 2};
  EXPECT_EQ(c.weight(), 7);
  EXPECT_EQ(c.sorted(), (Partition{3, 2, 1, 1}));
  EXPECT_THROW(Composition({1, 0}), std::invalid_argument);
}

TEST(PartitionsOf, SmallCases) {
  auto p0 = partitions_of(0);
  ASSERT_EQ(p0.size(), 1u);
  EXPECT_TRUE(p0.front().empty());

  auto p3 = partitions_of(3);
  ASSERT_EQ(p3.size(), 3u);
  EXPECT_EQ(p3[0], (Partition{3}));
  EXPECT_EQ(p3[1], (Partition{2, 1}));
  EXPECT_EQ(p3[2], (Partition{1, 1, 1}));

  EXPECT_EQ(partitions_of(5).size(), 7u);
}

TEST(PartitionsOf, GuardAndDomain) {
  EXPECT_THROW(partitions_of(41), GuardExceeded);
  EXPECT_THROW(partitions_of(8, 7), GuardExceeded);
  EXPECT_THROW(partitions_of(-1), std::invalid_argument);
}

TEST(PartitionsOf, MatchesNaiveGenerator) {
  for (int n = 0; n <= 14; ++n) {
    auto expected = oracle::naive_partitions(n);
    auto got = partitions_of(n);
    ASSERT_EQ(got.size(), expected.size()) << "n=" << n;
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(as_vector(got[i]), expected[i]);
  }
}

TEST(PartitionsOf, CountMatchesPentagonalRecurrence) {
  for (int n = 0; n <= 40; ++n) {
    EXPECT_EQ(mpz_class(partitions_of(n).size()), oracle::partition_count(n)) << "n=" << n;
  }
}

TEST(Transpose, Examples) {
  EXPECT_EQ(transpose(Partition{4}), (Partition{1, 1, 1, 1}));
  EXPECT_EQ(transpose(Partition{2, 2}), (Partition{2, 2}));
  EXPECT_EQ(transpose(Partition{3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(transpose(Partition{}), Partition{});
}

TEST(Transpose, InvolutiveAndMatchesOracle) {
  for (int n = 0; n <= 20; ++n) {
    for (const auto& a : partitions_of(n)) {
      EXPECT_EQ(transpose(transpose(a)), a);
      EXPECT_EQ(as_vector(transpose(a)), oracle::conjugate(as_vector(a)));
    }
  }
}

TEST(Dominates, Examples) {
  EXPECT_TRUE(dominates(Partition{3, 1}, Partition{2, 2}));
  EXPECT_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
  EXPECT_FALSE(dominates(Partition{2, 1, 1}, Partition{2, 2}));
  EXPECT_TRUE(dominates(Partition{2, 2}, Partition{2, 1, 1}));
  EXPECT_TRUE(dominates(Partition{}, Partition{}));
}

TEST(Dominates, WeightMismatchIsAnError) {
  EXPECT_THROW(dominates(Partition{3}, Partition{2}), WeightMismatch);
}

TEST(Dominates, IsAPartialOrderReversedByTranspose) {
  for (int n = 0; n <= 10; ++n) {
    auto ps = partitions_of(n);
    for (const auto& a : ps) {
      EXPECT_TRUE(dominates(a, a));
      for (const auto& b : ps) {
        const bool ab = dominates(a, b);
        EXPECT_EQ(ab, oracle::dominates(as_vector(a), as_vector(b)));
        if (ab && dominates(b, a)) {
          EXPECT_EQ(a, b);
        }
        EXPECT_EQ(ab, dominates(transpose(b), transpose(a)));
        if (!ab) continue;
        for (const auto& c : ps) {
          if (dominates(b, c)) {
            EXPECT_TRUE(dominates(a, c));
          }
        }
      }
    }
  }
}

TEST(CoveredBy, MatchesPairwiseCoveringRelation) {
  for (int n = 0; n <= 10; ++n) {
    auto ps = partitions_of(n);
    for (const auto& a : ps) {
      std::vector<Partition> expected;
      for (const auto& b : ps) {
        if (a == b || !dominates(a, b)) continue;
        bool between = std::any_of(ps.begin(), ps.end(), [&](const Partition& c) {
          return !(c == a) && !(c == b) && dominates(a, c) && dominates(c, b);
        });
        if (!between) expected.push_back(b);
      }
      EXPECT_EQ(covered_by(a), expected) << display_partition(a);
    }
  }
}

TEST(PartitionIndex, Examples) {
  PartitionIndex i3(3);
  EXPECT_EQ(i3.index_of(Partition{3}), 0u);
  EXPECT_EQ(i3.index_of(Partition{2, 1}), 1u);
  EXPECT_EQ(i3.index_of(Partition{1, 1, 1}), 2u);
  EXPECT_EQ(i3.transpose_index(0), 2u);
  PartitionIndex i2(2);
  EXPECT_EQ(i2.index_of(Partition{2}), 0u);
  EXPECT_EQ(i2.index_of(Partition{1, 1}), 1u);
  EXPECT_THROW(i3.index_of(Partition{2}), WeightMismatch);
}

TEST(PartitionIndex, CanonicalOrderExtendsDominance) {
  for (int n = 0; n <= 12; ++n) {
    PartitionIndex index(n);
    for (std::size_t i = 0; i < index.size(); ++i) {
      EXPECT_EQ(index.index_of(index.at(i)), i);
      for (std::size_t j = 0; j < index.size(); ++j) {
        if (i != j && dominates(index.at(i), index.at(j))) {
          EXPECT_LT(i, j);
        }
      }
    }
  }
}

TEST(CanonicalLess, OrdersWeightThenDescendingLex) {
  CanonicalLess less;
  EXPECT_TRUE(less(Partition{3}, Partition{2, 1}));
  EXPECT_FALSE(less(Partition{2, 1}, Partition{3}));
  EXPECT_TRUE(less(Partition{1, 1}, Partition{3}));
  EXPECT_FALSE(less(Partition{3}, Partition{3}));
}

TEST(ParsePartition, Examples) {
  EXPECT_EQ(parse_partition("3,1"), (Partition{3, 1}));
  EXPECT_THROW(parse_partition("1,3"), ParseError);
  EXPECT_EQ(parse_partition("1,3", ParseMode::lenient), (Partition{3, 1}));
  EXPECT_EQ(format_partition(parse_partition("2,2,1")), "2,2,1");
  EXPECT_EQ(parse_partition("(4, 2)"), (Partition{4, 2}));
  EXPECT_EQ(parse_partition(""), Partition{});
  EXPECT_EQ(display_partition(Partition{}), "()");
}

TEST(ParsePartition, Errors) {
  for (const char* bad : {"3,,1", ",1", "3,", "0", "2,0", "-1", "a", "3;1", "1.5", "99999999999"}) {
    EXPECT_THROW(parse_partition(bad, ParseMode::lenient), ParseError) << bad;
  }
}

TEST(ParsePartition, RoundTripsEveryPartition) {
  for (int n = 0; n <= 12; ++n) {
    for (const auto& a : partitions_of(n)) EXPECT_EQ(parse_partition(format_partition(a)), a);
  }
}

}  // namespace
}  // namespace pshcalc
