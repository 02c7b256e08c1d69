#include "symcensus/partitions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "symcensus/errors.hpp"

namespace symcensus::partitions {

namespace {

void require_range(int n, int lo, const char* what) {
  if (n < lo) {
    throw DomainError(std::string(what) + ": n must be >= " + std::to_string(lo) +
                      ", got " + std::to_string(n));
  }
  if (n > kMaxN) {
    throw DomainError(std::string(what) + ": n must be <= " + std::to_string(kMaxN) +
                      ", got " + std::to_string(n));
  }
}

// Q(n;1) by Q(n;1) = Q(n) - Q(n-1;1), Q(1;1) = 0.
std::vector<BigInt> q_ge2_by_recurrence(int max_n) {
  const auto q = q_table(max_n);
  std::vector<BigInt> out(static_cast<std::size_t>(max_n) + 1, 0);
  for (int k = 2; k <= max_n; ++k) {
    out[k] = q[k] - out[k - 1];
  }
  return out;
}

void enumerate_rec(std::vector<int>& prefix, int remaining, int min_part, bool distinct,
                   const std::function<void(std::span<const int>)>& visit) {
  if (remaining == 0) {
    visit(prefix);
    return;
  }
  for (int part = min_part; part <= remaining; ++part) {
    const int rest = remaining - part;
    const int next_min = distinct ? part + 1 : part;
    // The remainder must be 0 or itself a valid tail starting at next_min.
    if (rest != 0 && rest < next_min) continue;
    prefix.push_back(part);
    enumerate_rec(prefix, rest, next_min, distinct, visit);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<BigInt> p_table(int max_n) {
  if (max_n < 0) throw DomainError("p_table: max_n must be non-negative");
  std::vector<BigInt> p(static_cast<std::size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= max_n; ++m) {
    BigInt acc = 0;
    // Generalized pentagonal numbers k(3k-1)/2 for k = 1, -1, 2, -2, ...
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      if (g1 > m) break;
      const bool plus = (k % 2) == 1;
      if (plus) acc += p[m - g1]; else acc -= p[m - g1];
      const int g2 = k * (3 * k + 1) / 2;
      if (g2 <= m) {
        if (plus) acc += p[m - g2]; else acc -= p[m - g2];
      }
    }
    p[m] = std::move(acc);
  }
  return p;
}

std::vector<BigInt> distinct_min_part_table(int max_n, int min_part) {
  if (max_n < 0) throw DomainError("distinct_min_part_table: max_n must be non-negative");
  if (min_part < 1) throw DomainError("distinct_min_part_table: min_part must be >= 1");
  // by_len[k][s]: partitions of s into exactly k distinct parts, all >= min_part.
  // Removing one from every part maps k distinct parts >= m onto k distinct
  // parts >= m - 1, so we shift the problem to parts >= 1 first:
  // subtract (min_part - 1) from each part, giving total s - k(min_part - 1).
  // Partitions of t into exactly k distinct positive parts satisfy
  // D(t, k) = D(t - k, k) + D(t - k, k - 1).
  const std::size_t size = static_cast<std::size_t>(max_n) + 1;
  std::vector<BigInt> total(size, 0);
  total[0] = 1;
  std::vector<BigInt> prev(size, 0);  // D(., k - 1)
  prev[0] = 1;                        // D(0, 0) = 1
  for (int k = 1;; ++k) {
    const long long min_sum = static_cast<long long>(k) * (k + 1) / 2 +
                              static_cast<long long>(k) * (min_part - 1);
    if (min_sum > max_n) break;
    std::vector<BigInt> cur(size, 0);
    for (int t = k; t <= max_n; ++t) {
      cur[t] = cur[t - k] + prev[t - k];
    }
    const int shift = k * (min_part - 1);
    for (int t = 0; t + shift <= max_n; ++t) {
      if (!cur[t].is_zero()) total[t + shift] += cur[t];
    }
    prev = std::move(cur);
  }
  return total;
}

std::vector<BigInt> q_table(int max_n) { return distinct_min_part_table(max_n, 1); }

BigInt count_p(int n) {
  require_range(n, 1, "count_p");
  return p_table(n)[n];
}

BigInt count_q(int n) {
  require_range(n, 1, "count_q");
  return q_table(n)[n];
}

BigInt count_r(int n) {
  require_range(n, 1, "count_r");
  return count_p(n) - count_q(n);
}

BigInt count_p_ge2(int n) {
  require_range(n, 2, "count_p_ge2");
  const auto p = p_table(n);
  return p[n] - p[n - 1];
}

BigInt count_q_ge2(int n) {
  require_range(n, 2, "count_q_ge2");
  BigInt by_recurrence = q_ge2_by_recurrence(n)[n];
  const BigInt direct = distinct_min_part_table(n, 2)[n];
  if (by_recurrence != direct) {
    throw InconsistencyError("count_q_ge2(" + std::to_string(n) +
                             "): recurrence and direct count disagree");
  }
  return by_recurrence;
}

BigInt count_r_ge2(int n) {
  require_range(n, 2, "count_r_ge2");
  return count_p_ge2(n) - count_q_ge2(n);
}

PartitionCounts counts(int n) {
  require_range(n, 1, "counts");
  PartitionCounts c;
  c.n = n;
  c.p = count_p(n);
  c.q = count_q(n);
  c.r = c.p - c.q;
  if (n >= 2) {
    c.p_ge2 = count_p_ge2(n);
    c.q_ge2 = count_q_ge2(n);
    c.r_ge2 = c.p_ge2 - c.q_ge2;
  }
  return c;
}

void for_each_partition(int n, int min_part, bool distinct,
                        const std::function<void(std::span<const int>)>& visit) {
  if (n < 1) throw DomainError("for_each_partition: n must be >= 1");
  if (min_part < 1) throw DomainError("for_each_partition: min_part must be >= 1");
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  enumerate_rec(prefix, n, min_part, distinct, visit);
}

std::vector<Partition> enumerate(int n, int min_part, bool distinct) {
  std::vector<Partition> out;
  for_each_partition(n, min_part, distinct, [&out](std::span<const int> parts) {
    out.push_back(Partition::from_sorted({parts.begin(), parts.end()}));
  });
  return out;
}

double asymptotic_p(int n) {
  if (n < 1) throw DomainError("asymptotic_p: n must be >= 1");
  const double x = static_cast<double>(n);
  return std::exp(std::numbers::pi * std::sqrt(2.0 * x / 3.0)) /
         (4.0 * x * std::sqrt(3.0));
}

double asymptotic_q(int n) {
  if (n < 1) throw DomainError("asymptotic_q: n must be >= 1");
  const double x = static_cast<double>(n);
  return std::exp(std::numbers::pi * std::sqrt(x / 3.0)) /
         (4.0 * std::pow(x, 0.75) * std::pow(3.0, 0.25));
}

}  // namespace symcensus::partitions
