#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "helpers.hpp"
#include "symcensus/errors.hpp"
#include "symcensus/partitions.hpp"

namespace pt = symcensus::partitions;
using symcensus::BigInt;
using symcensus::DomainError;
using testing_support::parts_of;

TEST(CountP, KnownValues) {
  EXPECT_EQ(pt::count_p(1), 1);
  EXPECT_EQ(pt::count_p(10), 42);
  EXPECT_EQ(pt::count_p(49), 173525);
}

TEST(CountP, ExceedsSixtyFourBits) {
  EXPECT_EQ(pt::count_p(1000).str(), "24061467864032622473692149727991");
}

TEST(CountQ, KnownValues) {
  EXPECT_EQ(pt::count_q(1), 1);
  EXPECT_EQ(pt::count_q(7), 5);
  EXPECT_EQ(pt::count_q(10), 10);
}

TEST(CountR, KnownValues) {
  const int expected[] = {0, 1, 1, 3, 4, 7, 10, 16, 22, 32};
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(pt::count_r(n), expected[n - 1]) << "n=" << n;
}

TEST(CountGe2, KnownValues) {
  EXPECT_EQ(pt::count_p_ge2(2), 1);
  EXPECT_EQ(pt::count_p_ge2(6), 4);
  EXPECT_EQ(pt::count_p_ge2(10), 12);
  EXPECT_EQ(pt::count_q_ge2(5), 2);
  EXPECT_EQ(pt::count_q_ge2(7), 3);
  EXPECT_EQ(pt::count_q_ge2(8), 3);
  EXPECT_EQ(pt::count_r_ge2(4), 1);
  EXPECT_EQ(pt::count_r_ge2(8), 4);
  EXPECT_EQ(pt::count_r_ge2(10), 7);
}

TEST(Counts, DomainErrors) {
  EXPECT_THROW((void)pt::count_p(0), DomainError);
  EXPECT_THROW((void)pt::count_q(-3), DomainError);
  EXPECT_THROW((void)pt::count_p_ge2(1), DomainError);
  EXPECT_THROW((void)pt::count_p(pt::kMaxN + 1), DomainError);
}

TEST(Counts, RecordAtOne) {
  const auto c = pt::counts(1);
  EXPECT_EQ(c.p, 1);
  EXPECT_EQ(c.r, 0);
  EXPECT_EQ(c.p_ge2, 0);
  EXPECT_EQ(c.q_ge2, 0);
  EXPECT_EQ(c.r_ge2, 0);
}

TEST(PTable, PentagonalMatchesCoinChange) {
  const auto fast = pt::p_table(200);
  const auto slow = oracle::coin_change_p(200);
  ASSERT_EQ(fast.size(), slow.size());
  for (int n = 0; n <= 200; ++n) EXPECT_EQ(fast[n], slow[n]) << "n=" << n;
}

TEST(QTable, DistinctDpMatchesKnapsack) {
  const auto fast = pt::q_table(200);
  const auto slow = oracle::knapsack_q(200);
  for (int n = 0; n <= 200; ++n) EXPECT_EQ(fast[n], slow[n]) << "n=" << n;
  const auto fast2 = pt::distinct_min_part_table(200, 3);
  const auto slow2 = oracle::knapsack_q(200, 3);
  for (int n = 0; n <= 200; ++n) EXPECT_EQ(fast2[n], slow2[n]) << "n=" << n;
}

TEST(Recurrences, Ge2VariantsForSmallN) {
  for (int n = 2; n <= 60; ++n) {
    EXPECT_EQ(pt::count_p_ge2(n), pt::count_p(n) - pt::count_p(n - 1));
    const BigInt prev = n == 2 ? BigInt(0) : pt::count_q_ge2(n - 1);
    EXPECT_EQ(pt::count_q_ge2(n), pt::count_q(n) - prev);
    EXPECT_EQ(pt::count_r_ge2(n), pt::count_p_ge2(n) - pt::count_q_ge2(n));
  }
}

TEST(Enumerate, SpecExamples) {
  const auto four = pt::enumerate(4, 1, false);
  std::vector<std::vector<int>> got;
  for (const auto& p : four) got.push_back(parts_of(p));
  EXPECT_EQ(got, (std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 1, 2}, {1, 3}, {2, 2}, {4}}));

  got.clear();
  for (const auto& p : pt::enumerate(7, 2, true)) got.push_back(parts_of(p));
  EXPECT_EQ(got, (std::vector<std::vector<int>>{{2, 5}, {3, 4}, {7}}));

  const auto two = pt::enumerate(2, 2, false);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(parts_of(two[0]), std::vector<int>{2});
}

TEST(Enumerate, MatchesBruteForceCompositions) {
  for (int n = 1; n <= 14; ++n) {
    for (int min_part : {1, 2, 3}) {
      for (bool distinct : {false, true}) {
        std::set<std::vector<int>> got;
        for (const auto& p : pt::enumerate(n, min_part, distinct)) got.insert(parts_of(p));
        EXPECT_EQ(got, oracle::brute_partitions(n, min_part, distinct))
            << "n=" << n << " min_part=" << min_part << " distinct=" << distinct;
      }
    }
  }
}

TEST(Enumerate, CountsAgreeUpToSixty) {
  const auto p = oracle::coin_change_p(60);
  const auto p2 = oracle::coin_change_p(60, 2);
  const auto q = oracle::knapsack_q(60);
  const auto q2 = oracle::knapsack_q(60, 2);
  for (int n = 1; n <= 60; ++n) {
    long long all = 0, repeated = 0;
    pt::for_each_partition(n, 1, false, [&](std::span<const int> parts) {
      ++all;
      if (std::adjacent_find(parts.begin(), parts.end()) != parts.end()) ++repeated;
    });
    EXPECT_EQ(BigInt(all), p[n]);
    EXPECT_EQ(pt::count_r(n), repeated);
    EXPECT_EQ(pt::count_q(n), q[n]);
    if (n >= 2) {
      EXPECT_EQ(pt::count_p_ge2(n), p2[n]);
      EXPECT_EQ(pt::count_q_ge2(n), q2[n]);
    }
  }
}

TEST(Enumerate, ElementsAreCanonical) {
  for (const auto& p : pt::enumerate(12, 1, false)) {
    const auto v = parts_of(p);
    EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
    EXPECT_EQ(p.n(), 12);
    EXPECT_GE(p.min_part(), 1);
  }
}

TEST(Asymptotics, RatioNearOneAndImproving) {
  const double r100 = static_cast<double>(pt::count_p(100)) / pt::asymptotic_p(100);
  const double r200 = static_cast<double>(pt::count_p(200)) / pt::asymptotic_p(200);
  EXPECT_GE(r100, 0.9);
  EXPECT_LE(r100, 1.1);
  EXPECT_LT(std::abs(r200 - 1.0), std::abs(r100 - 1.0));
}

TEST(Asymptotics, Monotone) {
  for (int n = 1; n < 300; ++n) {
    EXPECT_LT(pt::asymptotic_p(n), pt::asymptotic_p(n + 1));
    EXPECT_LT(pt::asymptotic_q(n), pt::asymptotic_q(n + 1));
  }
}

TEST(Asymptotics, DistinctPartsRatio) {
  const double r = static_cast<double>(pt::count_q(400)) / pt::asymptotic_q(400);
  EXPECT_NEAR(r, 1.0, 0.1);
}
