#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "symcensus/bigint.hpp"

namespace symcensus::cli {

/// One row of the published table of partition counts, as printed.
struct PrintedTableRow {
  int n;
  int p, q, r, p_ge2, q_ge2, r_ge2;
};

/// Published Table 1 (N = 1..10), verbatim including its misprints.
extern const std::array<PrintedTableRow, 10> kPrintedTable;

/// Published list of P(N) for N = 1..49, verbatim including its misprint.
extern const std::array<int, 49> kPrintedPList;

/// A printed value that differs from the computed one.
struct Erratum {
  std::string source;  // "table1" or "plist"
  int n = 0;
  std::string column;  // "P", "Q", "R", "P(;1)", "Q(;1)", "R(;1)"
  std::string printed;
  std::string computed;
};

/// Discrepancies between the printed fixtures and exact counts, restricted
/// to rows with n in [lo, hi]. Computed, not hard-coded.
[[nodiscard]] std::vector<Erratum> table_errata(int lo, int hi);
[[nodiscard]] std::vector<Erratum> plist_errata(int lo, int hi);

/// Printed P(n), if the list covers n.
[[nodiscard]] std::optional<int> printed_p(int n);

}  // namespace symcensus::cli
