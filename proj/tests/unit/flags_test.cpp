#include <gtest/gtest.h>

#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "symcensus/errors.hpp"
#include "symcensus/flags.hpp"
#include "symcensus/lieverify.hpp"
#include "symcensus/partitions.hpp"

namespace fl = symcensus::flags;
namespace pt = symcensus::partitions;
using symcensus::BigInt;
using symcensus::DomainError;
using symcensus::Partition;
using testing_support::parts_of;

TEST(Profile, Examples) {
  const auto a = fl::profile(Partition({2, 2, 3}));
  EXPECT_EQ(a(2), 2);
  EXPECT_EQ(a(3), 1);
  EXPECT_EQ(a(5), 0);
  EXPECT_EQ(a.length(), 3);
  EXPECT_EQ(fl::profile(Partition({2, 2, 2}))(2), 3);
  EXPECT_EQ(fl::profile(Partition({4}))(4), 1);
  EXPECT_EQ(fl::profile(Partition({4})).psi.size(), 1u);
}

TEST(PhiIndices, Examples) {
  EXPECT_EQ(fl::phi_indices(Partition({2, 2, 3}), 2), (std::vector<int>{1, 2}));
  EXPECT_TRUE(fl::phi_indices(Partition({2, 2, 3}), 5).empty());
  EXPECT_EQ(fl::phi_indices(Partition({2, 2, 4, 4, 4}), 4), (std::vector<int>{3, 4, 5}));
}

TEST(Equivalent, Examples) {
  EXPECT_TRUE(fl::equivalent(Partition({2, 3, 2}), Partition({2, 2, 3})));
  EXPECT_FALSE(fl::equivalent(Partition({2, 2, 4}), Partition({2, 3, 3})));
  EXPECT_FALSE(fl::equivalent(Partition({4, 4}), Partition({2, 2, 2, 2})));
  EXPECT_THROW((void)fl::equivalent(Partition({2}), Partition({3})), DomainError);
}

TEST(Equivalent, ClassCountIsP) {
  for (int n = 1; n <= 12; ++n) {
    const auto all = pt::enumerate(n, 1, false);
    // Greedy class assignment using only `equivalent`.
    std::vector<Partition> reps;
    for (const auto& p : all) {
      bool found = false;
      for (const auto& r : reps) found = found || fl::equivalent(p, r);
      if (!found) reps.push_back(p);
    }
    EXPECT_EQ(BigInt(reps.size()), pt::count_p(n)) << "n=" << n;
  }
}

TEST(OrbitLength, Examples) {
  EXPECT_EQ(fl::orbit_length(Partition({2, 2, 3})), 3);
  EXPECT_EQ(fl::orbit_length(Partition({2, 3, 4})), 6);
  EXPECT_EQ(fl::orbit_length(Partition({2, 2, 2})), 1);
}

TEST(OrbitLength, MatchesPermutationCount) {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : pt::enumerate(n, 1, false)) {
      EXPECT_EQ(fl::orbit_length(p), oracle::count_orderings(parts_of(p))) << p.to_string();
    }
  }
}

TEST(OrbitLength, OrbitStabilizer) {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : pt::enumerate(n, 1, false)) {
      const BigInt lhs = fl::orbit_length(p) * fl::weyl(p).order;
      EXPECT_EQ(lhs, oracle::factorial(static_cast<int>(p.length()))) << p.to_string();
    }
  }
}

TEST(Weyl, Examples) {
  const auto w = fl::weyl(Partition({2, 2, 2}));
  ASSERT_EQ(w.factors.size(), 1u);
  EXPECT_EQ(w.factors[0], (fl::WeylFactor{2, 3}));
  EXPECT_EQ(w.order, 6);
  EXPECT_TRUE(w.nontrivial);

  const auto t = fl::weyl(Partition({2, 3}));
  EXPECT_EQ(t.factors, (std::vector<fl::WeylFactor>{{2, 1}, {3, 1}}));
  EXPECT_EQ(t.order, 1);
  EXPECT_FALSE(t.nontrivial);
  EXPECT_TRUE(t.involutions.empty());

  const auto u = fl::weyl(Partition({2, 2, 3, 3}));
  EXPECT_EQ(u.factors, (std::vector<fl::WeylFactor>{{2, 2}, {3, 2}}));
  EXPECT_EQ(u.order, 4);
  EXPECT_EQ(u.sign_factors().size(), 2u);
}

TEST(Weyl, NontrivialIffRepeatedPart) {
  for (int n = 1; n <= 12; ++n) {
    for (const auto& p : pt::enumerate(n, 1, false)) {
      const auto v = parts_of(p);
      const bool repeats = std::adjacent_find(v.begin(), v.end()) != v.end();
      EXPECT_EQ(fl::weyl(p).nontrivial, repeats);
    }
  }
}

TEST(Weyl, InvolutionsNormalizeBlockGroup) {
  for (int n = 2; n <= 12; ++n) {
    for (const auto& p : pt::enumerate(n, 2, false)) {
      for (const auto& inv : fl::weyl(p).involutions) {
        EXPECT_EQ(p[inv.block_a - 1], p[inv.block_b - 1]);
        EXPECT_EQ(inv.block_size, p[inv.block_a - 1]);
        const auto t = symcensus::lieverify::block_swap_matrix(p, inv);
        EXPECT_TRUE((t * t.transpose()).isIdentity(1e-12));
        EXPECT_TRUE((t * t).isIdentity(1e-12));
        EXPECT_TRUE(symcensus::lieverify::involution_normalizes(p, inv));
      }
    }
  }
}

TEST(Borel, OffsetsAndDimension) {
  const auto b = fl::borel(Partition({2, 2, 4}), fl::BorelKind::full);
  EXPECT_EQ(b.block_offsets, (std::vector<int>{0, 2, 4}));
  EXPECT_EQ(b.lie_dimension, 1 + 1 + 6);
  EXPECT_EQ(fl::to_string(fl::BorelKind::connected), "connected");
}

TEST(ClassCensus, Examples) {
  const auto c6 = fl::class_census(6);
  EXPECT_EQ(c6.total, 11);
  EXPECT_EQ(c6.trivial_weyl, 4);
  EXPECT_EQ(c6.nontrivial_weyl, 7);
  const auto c4 = fl::class_census(4);
  EXPECT_EQ(c4.total_ge2, 2);
  EXPECT_EQ(c4.nontrivial_weyl_ge2, 1);
  const auto c1 = fl::class_census(1);
  EXPECT_EQ(c1.total, 1);
  EXPECT_EQ(c1.nontrivial_weyl, 0);
}

TEST(ClassCensus, MatchesDirectTally) {
  for (int n = 2; n <= 16; ++n) {
    long long total = 0, nontrivial = 0, total2 = 0, nontrivial2 = 0;
    for (const auto& v : oracle::brute_partitions(n)) {
      const bool rep = std::adjacent_find(v.begin(), v.end()) != v.end();
      ++total;
      nontrivial += rep;
      if (v.front() >= 2) {
        ++total2;
        nontrivial2 += rep;
      }
    }
    const auto c = fl::class_census(n);
    EXPECT_EQ(c.total, total);
    EXPECT_EQ(c.nontrivial_weyl, nontrivial);
    EXPECT_EQ(c.trivial_weyl, total - nontrivial);
    EXPECT_EQ(c.total_ge2, total2);
    EXPECT_EQ(c.nontrivial_weyl_ge2, nontrivial2);
    EXPECT_EQ(c.trivial_weyl_ge2, total2 - nontrivial2);
  }
}

TEST(BorelClassification, Examples) {
  using P = fl::BorelPair;
  EXPECT_EQ(fl::borel_classification(7), (std::vector<P>{{"SO(7)", "SO(6)"}, {"G2", "SU(3)"}}));
  EXPECT_EQ(fl::borel_classification(4),
            (std::vector<P>{{"SO(4)", "SO(3)"}, {"SU(2)", "SU(1)"}, {"Sp(1)", "Sp(0)"}}));
  EXPECT_EQ(fl::borel_classification(3), (std::vector<P>{{"SO(3)", "SO(2)"}}));
}

TEST(BorelClassification, ExceptionalSpinCases) {
  auto has = [](int n, const fl::BorelPair& bp) {
    const auto v = fl::borel_classification(n);
    return std::find(v.begin(), v.end(), bp) != v.end();
  };
  EXPECT_TRUE(has(16, {"Spin(9)", "Spin(7)"}));
  EXPECT_TRUE(has(8, {"Spin(7)", "G2"}));
  EXPECT_FALSE(has(15, {"Spin(9)", "Spin(7)"}));
  EXPECT_THROW((void)fl::borel_classification(1), DomainError);
}

TEST(Nodal, Examples) {
  const auto a = fl::nodal_subspaces(Partition({2, 2}), {{1}});
  EXPECT_EQ(a, (std::vector<fl::FixedSubspaceSpec>{{1, 2, 2}}));
  EXPECT_TRUE(fl::nodal_subspaces(Partition({2, 2, 3}), {{0}}).empty());
  const auto c = fl::nodal_subspaces(Partition({2, 2, 2}), {{1}});
  EXPECT_EQ(c, (std::vector<fl::FixedSubspaceSpec>{{1, 2, 2}, {1, 3, 2}, {2, 3, 2}}));
}

TEST(Nodal, RequiresNontrivialWeylGroup) {
  EXPECT_THROW((void)fl::nodal_subspaces(Partition({2, 3}), {{}}), DomainError);
}

TEST(Nodal, RejectsMismatchedSignRep) {
  EXPECT_THROW((void)fl::nodal_subspaces(Partition({2, 2}), {{1, 0}}), DomainError);
  EXPECT_THROW((void)fl::nodal_subspaces(Partition({2, 2}), {{2}}), DomainError);
  EXPECT_THROW((void)fl::nodal_subspaces(Partition({2, 3}), {{1}}), DomainError);
}

TEST(Nodal, CodimensionEqualsBlockSize) {
  for (int n = 2; n <= 10; ++n) {
    for (const auto& p : pt::enumerate(n, 1, false)) {
      if (!fl::weyl(p).nontrivial) continue;
      const auto k = fl::weyl(p).sign_factors().size();
      const fl::SignRep all_ones{std::vector<int>(k, 1)};
      for (const auto& s : fl::nodal_subspaces(p, all_ones)) {
        EXPECT_EQ(s.codimension, p[s.block_a - 1]);
        EXPECT_EQ(p[s.block_a - 1], p[s.block_b - 1]);
      }
    }
  }
}
