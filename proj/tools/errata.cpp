#include "errata.hpp"

#include <algorithm>

#include "symcensus/partitions.hpp"

namespace symcensus::cli {

const std::array<PrintedTableRow, 10> kPrintedTable = {{
    {1, 1, 1, 0, 0, 0, 0},
    {2, 2, 1, 1, 1, 1, 0},
    {3, 3, 2, 1, 1, 1, 0},
    {4, 5, 2, 3, 2, 1, 1},
    {5, 7, 3, 4, 2, 2, 0},
    {6, 11, 4, 7, 4, 2, 2},
    {7, 15, 5, 10, 4, 2, 2},
    {8, 22, 6, 16, 7, 4, 3},
    {9, 30, 8, 22, 8, 5, 3},
    {10, 42, 10, 32, 12, 5, 7},
}};

const std::array<int, 49> kPrintedPList = {
    1,     2,     2,     5,     7,     11,    15,    22,    30,    42,
    56,    77,    101,   135,   176,   231,   297,   385,   490,   627,
    792,   1002,  1255,  1575,  1958,  2436,  3010,  3718,  4565,  5604,
    6842,  8349,  10143, 12310, 14883, 17977, 21637, 26015, 31185, 37338,
    44583, 53174, 63261, 75175, 89134, 105558, 124754, 147273, 173525,
};

std::vector<Erratum> table_errata(int lo, int hi) {
  std::vector<Erratum> out;
  lo = std::max(lo, 1);
  hi = std::min(hi, static_cast<int>(kPrintedTable.size()));
  if (lo > hi) return out;
  const auto p = partitions::p_table(hi);
  const auto q = partitions::q_table(hi);
  const auto q2 = partitions::distinct_min_part_table(hi, 2);
  for (int n = lo; n <= hi; ++n) {
    const auto& row = kPrintedTable[static_cast<std::size_t>(n - 1)];
    const BigInt p_ge2 = n >= 2 ? BigInt(p[n] - p[n - 1]) : BigInt(0);
    const BigInt q_ge2 = n >= 2 ? q2[n] : BigInt(0);
    const std::pair<const char*, std::pair<int, BigInt>> cols[] = {
        {"P", {row.p, p[n]}},
        {"Q", {row.q, q[n]}},
        {"R", {row.r, p[n] - q[n]}},
        {"P(;1)", {row.p_ge2, p_ge2}},
        {"Q(;1)", {row.q_ge2, q_ge2}},
        {"R(;1)", {row.r_ge2, p_ge2 - q_ge2}},
    };
    for (const auto& [name, vals] : cols) {
      if (BigInt(vals.first) != vals.second) {
        out.push_back({"table1", n, name, std::to_string(vals.first), vals.second.str()});
      }
    }
  }
  return out;
}

std::vector<Erratum> plist_errata(int lo, int hi) {
  std::vector<Erratum> out;
  lo = std::max(lo, 1);
  hi = std::min(hi, static_cast<int>(kPrintedPList.size()));
  if (lo > hi) return out;
  const auto p = partitions::p_table(hi);
  for (int n = lo; n <= hi; ++n) {
    const int printed = kPrintedPList[static_cast<std::size_t>(n - 1)];
    if (BigInt(printed) != p[n]) {
      out.push_back({"plist", n, "P", std::to_string(printed), p[n].str()});
    }
  }
  return out;
}

std::optional<int> printed_p(int n) {
  if (n < 1 || n > static_cast<int>(kPrintedPList.size())) return std::nullopt;
  return kPrintedPList[static_cast<std::size_t>(n - 1)];
}

}  // namespace symcensus::cli
