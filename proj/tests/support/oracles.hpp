#pragma once

// Slow, independent reference implementations used only by the tests.
// None of these call into the library's counting or enumeration code.

#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <vector>

#include "symcensus/bigint.hpp"

namespace oracle {

using symcensus::BigInt;

// Coin-change DP: number of partitions of 0..max_n with parts in [min_part, max_n].
inline std::vector<BigInt> coin_change_p(int max_n, int min_part = 1) {
  std::vector<BigInt> ways(max_n + 1, 0);
  ways[0] = 1;
  for (int coin = min_part; coin <= max_n; ++coin)
    for (int t = coin; t <= max_n; ++t) ways[t] += ways[t - coin];
  return ways;
}

// 0/1 knapsack: partitions of 0..max_n into distinct parts >= min_part.
inline std::vector<BigInt> knapsack_q(int max_n, int min_part = 1) {
  std::vector<BigInt> ways(max_n + 1, 0);
  ways[0] = 1;
  for (int coin = min_part; coin <= max_n; ++coin)
    for (int t = max_n; t >= coin; --t) ways[t] += ways[t - coin];
  return ways;
}

// All compositions of n (2^(n-1) of them), sorted and deduplicated.
inline std::set<std::vector<int>> brute_partitions(int n) {
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    std::sort(parts.begin(), parts.end());
    out.insert(parts);
  }
  return out;
}

inline std::set<std::vector<int>> brute_partitions(int n, int min_part, bool distinct) {
  std::set<std::vector<int>> out;
  for (const auto& p : brute_partitions(n)) {
    if (p.front() < min_part) continue;
    if (distinct && std::adjacent_find(p.begin(), p.end()) != p.end()) continue;
    out.insert(p);
  }
  return out;
}

// Distinct orderings of a multiset, counted one by one.
inline long long count_orderings(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end());
  long long k = 0;
  do {
    ++k;
  } while (std::next_permutation(parts.begin(), parts.end()));
  return k;
}

inline long long factorial(int r) {
  long long f = 1;
  for (int i = 2; i <= r; ++i) f *= i;
  return f;
}

inline std::set<int> interior_prefix_sums(const std::vector<int>& parts) {
  std::set<int> s;
  int acc = 0;
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) s.insert(acc += parts[i]);
  return s;
}

// Cut points shared by both partitions, always including 0 and n.
inline std::vector<int> common_cuts(const std::vector<int>& a, const std::vector<int>& b, int n) {
  const auto sa = interior_prefix_sums(a);
  const auto sb = interior_prefix_sums(b);
  std::vector<int> cuts{0};
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(cuts));
  cuts.push_back(n);
  return cuts;
}

// Lie dimension of the group generated by two block subgroups: each interval
// between consecutive common cut points carries a full so(length).
inline int generated_lie_dimension(const std::vector<int>& a, const std::vector<int>& b, int n) {
  const auto cuts = common_cuts(a, b, n);
  int dim = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const int len = cuts[i + 1] - cuts[i];
    dim += len * (len - 1) / 2;
  }
  return dim;
}

}  // namespace oracle
