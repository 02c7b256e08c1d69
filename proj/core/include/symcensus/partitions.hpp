#pragma once

#include <functional>
#include <span>
#include <vector>

#include "symcensus/bigint.hpp"
#include "symcensus/partition.hpp"

/// Exact counting and enumeration of integer partitions.
///
/// P(n)        unrestricted partitions
/// Q(n)        partitions into distinct parts
/// R(n)        P(n) - Q(n), partitions with at least one repeated part
/// P(n;1) etc. the same three counts restricted to parts >= 2
///
/// All counts are exact big integers. The public count_* functions reject
/// n = 0 (and n < 2 for the ">= 2" variants) and n > kMaxN.
namespace symcensus::partitions {

inline constexpr int kMaxN = 10000;

struct PartitionCounts {
  int n = 0;
  BigInt p, q, r;
  BigInt p_ge2, q_ge2, r_ge2;  // zero when n < 2
};

[[nodiscard]] BigInt count_p(int n);
[[nodiscard]] BigInt count_q(int n);
[[nodiscard]] BigInt count_r(int n);
[[nodiscard]] BigInt count_p_ge2(int n);
/// Alternating recurrence Q(n;1) = Q(n) - Q(n-1;1), checked against a
/// direct count of distinct partitions with parts >= 2. Throws
/// InconsistencyError if the two disagree.
[[nodiscard]] BigInt count_q_ge2(int n);
[[nodiscard]] BigInt count_r_ge2(int n);

[[nodiscard]] PartitionCounts counts(int n);

/// P(0..max_n) by Euler's pentagonal-number recurrence; table[0] == 1.
[[nodiscard]] std::vector<BigInt> p_table(int max_n);
/// Q(0..max_n) by a DP over the number of distinct parts; table[0] == 1.
[[nodiscard]] std::vector<BigInt> q_table(int max_n);
/// Number of partitions of 0..max_n into distinct parts all >= min_part.
[[nodiscard]] std::vector<BigInt> distinct_min_part_table(int max_n, int min_part);

/// Visits every partition of n with parts >= min_part (pairwise distinct
/// when `distinct`), in lexicographic order of the canonical form. The
/// span is only valid for the duration of the callback.
void for_each_partition(int n, int min_part, bool distinct,
                        const std::function<void(std::span<const int>)>& visit);

[[nodiscard]] std::vector<Partition> enumerate(int n, int min_part, bool distinct);

/// Leading Hardy-Ramanujan term exp(pi sqrt(2n/3)) / (4 n sqrt 3).
[[nodiscard]] double asymptotic_p(int n);
/// exp(pi sqrt(n/3)) / (4 n^{3/4} 3^{1/4}).
[[nodiscard]] double asymptotic_q(int n);

}  // namespace symcensus::partitions
