#pragma once

#include <string>
#include <vector>

#include "symcensus/bigint.hpp"
#include "symcensus/partition.hpp"

/// "Double partitions": for each partition M_1 <= ... <= M_r of a base
/// integer M, a partition of n with every part >= 2 and a nontrivial Weyl
/// group, obtained by doubling every M_i into the pair 2M_i, 2M_i and
/// adding one fixed part depending on n mod 4:
///
///   n = 4M      nothing added
///   n = 4M + 2  part 2
///   n = 4M + 3  part 3
///   n = 4M + 5  part 5   (n = 1 mod 4, n >= 9)
///
/// Distinct base partitions give inequivalent results, so the family has
/// P(M) members. n = 5 and n < 4 admit no construction.
namespace symcensus::special {

/// Largest base integer M for which family() materializes its members.
inline constexpr int kMaxFamilyBase = 50;

enum class FamilyCase { mod0, mod2, mod3, mod5 };

struct CaseInfo {
  FamilyCase kind;
  int m;          // base integer M
  int extra;      // added part (0 for mod0)
};

struct SpecialFamily {
  int n = 0;
  FamilyCase kind = FamilyCase::mod0;
  int m = 0;
  std::vector<Partition> members;  // in lexicographic order of the base partition
};

/// Throws UnsupportedDimension for n < 4 or n == 5.
[[nodiscard]] CaseInfo classify_dimension(int n);

[[nodiscard]] Partition double_partition(const Partition& base, int n);
[[nodiscard]] SpecialFamily family(int n);
[[nodiscard]] BigInt solutions_count(int n);

[[nodiscard]] std::string to_string(FamilyCase kind);

}  // namespace symcensus::special
