#include "symcensus/special.hpp"

#include <set>

#include "symcensus/errors.hpp"
#include "symcensus/flags.hpp"
#include "symcensus/partitions.hpp"

namespace symcensus::special {

CaseInfo classify_dimension(int n) {
  if (n < 4 || n == 5) {
    throw UnsupportedDimension("no special-partition family for n = " + std::to_string(n) +
                               " (requires n >= 4 and n != 5)");
  }
  if (n > partitions::kMaxN) {
    throw DomainError("n must be <= " + std::to_string(partitions::kMaxN));
  }
  switch (n % 4) {
    case 0: return {FamilyCase::mod0, n / 4, 0};
    case 2: return {FamilyCase::mod2, (n - 2) / 4, 2};
    case 3: return {FamilyCase::mod3, (n - 3) / 4, 3};
    default: return {FamilyCase::mod5, (n - 5) / 4, 5};
  }
}

Partition double_partition(const Partition& base, int n) {
  const CaseInfo info = classify_dimension(n);
  if (base.n() != info.m) {
    throw DomainError("double_partition: base " + base.to_string() + " sums to " +
                      std::to_string(base.n()) + " but n = " + std::to_string(n) +
                      " needs a partition of " + std::to_string(info.m));
  }
  std::vector<int> parts;
  parts.reserve(2 * base.length() + 1);
  for (int m : base.parts()) {
    parts.push_back(2 * m);
    parts.push_back(2 * m);
  }
  if (info.extra != 0) parts.push_back(info.extra);
  // Sorted insertion of the extra part covers both placements the
  // construction distinguishes (before or among the small doubled pairs).
  return Partition(std::move(parts));
}

SpecialFamily family(int n) {
  const CaseInfo info = classify_dimension(n);
  if (info.m > kMaxFamilyBase) {
    throw DomainError("family(" + std::to_string(n) + "): base M = " + std::to_string(info.m) +
                      " exceeds " + std::to_string(kMaxFamilyBase) + "; use solutions_count");
  }
  SpecialFamily fam{n, info.kind, info.m, {}};
  for (const Partition& base : partitions::enumerate(info.m, 1, false)) {
    Partition member = double_partition(base, n);
    if (member.n() != n || !member.all_parts_at_least(2) || !flags::weyl(member).nontrivial) {
      throw InconsistencyError("family(" + std::to_string(n) + "): member " +
                               member.to_string() + " violates the family invariants");
    }
    fam.members.push_back(std::move(member));
  }
  // Canonical forms are complete invariants, so distinctness == inequivalence.
  const std::set<Partition> unique(fam.members.begin(), fam.members.end());
  if (unique.size() != fam.members.size() ||
      BigInt(fam.members.size()) != partitions::count_p(info.m)) {
    throw InconsistencyError("family(" + std::to_string(n) + "): members not pairwise distinct");
  }
  return fam;
}

BigInt solutions_count(int n) {
  return partitions::count_p(classify_dimension(n).m);
}

std::string to_string(FamilyCase kind) {
  switch (kind) {
    case FamilyCase::mod0: return "mod0";
    case FamilyCase::mod2: return "mod2";
    case FamilyCase::mod3: return "mod3";
    case FamilyCase::mod5: return "mod5";
  }
  return "unknown";
}

}  // namespace symcensus::special
