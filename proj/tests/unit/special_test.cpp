#include <gtest/gtest.h>

#include "helpers.hpp"
#include "symcensus/errors.hpp"
#include "symcensus/flags.hpp"
#include "symcensus/pairs.hpp"
#include "symcensus/partitions.hpp"
#include "symcensus/special.hpp"

namespace sp = symcensus::special;
using symcensus::BigInt;
using symcensus::Partition;
using symcensus::UnsupportedDimension;
using testing_support::parts_of;

TEST(ClassifyDimension, Residues) {
  EXPECT_EQ(sp::classify_dimension(8).kind, sp::FamilyCase::mod0);
  EXPECT_EQ(sp::classify_dimension(8).m, 2);
  EXPECT_EQ(sp::classify_dimension(6).kind, sp::FamilyCase::mod2);
  EXPECT_EQ(sp::classify_dimension(6).m, 1);
  EXPECT_EQ(sp::classify_dimension(7).kind, sp::FamilyCase::mod3);
  EXPECT_EQ(sp::classify_dimension(7).extra, 3);
  EXPECT_EQ(sp::classify_dimension(9).kind, sp::FamilyCase::mod5);
  EXPECT_EQ(sp::classify_dimension(9).m, 1);
  EXPECT_EQ(sp::classify_dimension(13).m, 2);
  EXPECT_THROW((void)sp::classify_dimension(5), UnsupportedDimension);
  EXPECT_THROW((void)sp::classify_dimension(3), UnsupportedDimension);
  EXPECT_THROW((void)sp::classify_dimension(0), UnsupportedDimension);
}

TEST(DoublePartition, Examples) {
  EXPECT_EQ(sp::double_partition(Partition({2}), 8), Partition({4, 4}));
  EXPECT_EQ(sp::double_partition(Partition({1, 1}), 8), Partition({2, 2, 2, 2}));
  EXPECT_EQ(sp::double_partition(Partition({1}), 7), Partition({2, 2, 3}));
  // The inserted odd part lands in sorted position.
  EXPECT_EQ(sp::double_partition(Partition({1, 3}), 19), Partition({2, 2, 3, 6, 6}));
}

TEST(DoublePartition, RejectsWrongBase) {
  EXPECT_THROW((void)sp::double_partition(Partition({3}), 8), symcensus::DomainError);
}

TEST(Family, Examples) {
  const auto f8 = sp::family(8);
  EXPECT_EQ(f8.members.size(), 2u);
  EXPECT_NE(std::find(f8.members.begin(), f8.members.end(), Partition({4, 4})), f8.members.end());
  EXPECT_NE(std::find(f8.members.begin(), f8.members.end(), Partition({2, 2, 2, 2})),
            f8.members.end());

  const auto f6 = sp::family(6);
  ASSERT_EQ(f6.members.size(), 1u);
  EXPECT_EQ(f6.members[0], Partition({2, 2, 2}));

  const auto f12 = sp::family(12);
  std::set<Partition> got(f12.members.begin(), f12.members.end());
  EXPECT_EQ(got, (std::set<Partition>{Partition({6, 6}), Partition({2, 2, 4, 4}),
                                      Partition({2, 2, 2, 2, 2, 2})}));
}

TEST(Solutions, Examples) {
  EXPECT_EQ(sp::solutions_count(8), 2);
  EXPECT_EQ(sp::solutions_count(9), 1);
  EXPECT_EQ(sp::solutions_count(12), 3);
  EXPECT_EQ(sp::solutions_count(16), 5);
  EXPECT_THROW((void)sp::solutions_count(5), UnsupportedDimension);
}

TEST(Family, InvariantsUpToSixty) {
  for (int n = 4; n <= 60; ++n) {
    if (n == 5) continue;
    const auto f = sp::family(n);
    EXPECT_EQ(BigInt(f.members.size()), sp::solutions_count(n)) << "n=" << n;
    for (std::size_t i = 0; i < f.members.size(); ++i) {
      const auto& p = f.members[i];
      EXPECT_EQ(p.n(), n);
      EXPECT_TRUE(p.all_parts_at_least(2));
      EXPECT_TRUE(symcensus::flags::weyl(p).nontrivial);
      for (std::size_t j = 0; j < i; ++j) {
        EXPECT_FALSE(symcensus::flags::equivalent(p, f.members[j]));
      }
    }
  }
}

TEST(Family, Mod0MembersHaveEvenPartsWithEvenMultiplicity) {
  for (int n = 4; n <= 40; n += 4) {
    for (const auto& p : sp::family(n).members) {
      for (const auto& [v, mult] : symcensus::flags::profile(p).psi) {
        EXPECT_EQ(v % 2, 0);
        EXPECT_EQ(mult % 2, 0);
      }
    }
  }
}

TEST(Family, DistinctMembersAlwaysHaveAWindowWithInvolution) {
  for (int n : {8, 9, 10, 11, 12, 13, 14, 15, 16, 20, 23}) {
    const auto f = sp::family(n);
    for (std::size_t i = 0; i < f.members.size(); ++i) {
      for (std::size_t j = i + 1; j < f.members.size(); ++j) {
        const auto& a = f.members[i];
        const auto& b = f.members[j];
        EXPECT_FALSE(symcensus::pairs::decompose(a, b).windows().empty());
        EXPECT_TRUE(symcensus::pairs::first_window_with_involution(a, b).has_value())
            << a.to_string() << " " << b.to_string();
      }
    }
  }
}

TEST(Family, RefusesHugeBase) {
  EXPECT_THROW((void)sp::family(4 * (sp::kMaxFamilyBase + 1)), symcensus::DomainError);
  EXPECT_GT(sp::solutions_count(4 * (sp::kMaxFamilyBase + 1)), 0);
}
