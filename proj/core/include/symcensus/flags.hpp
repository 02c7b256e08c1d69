#pragma once

#include <map>
#include <string>
#include <vector>

#include "symcensus/bigint.hpp"
#include "symcensus/partition.hpp"

/// Orthogonal partial flags R^n = V_1 (+) ... (+) V_r and their maximal
/// orthogonal Borel subgroups O(N_1) x ... x O(N_r), classified up to
/// O(n)-conjugacy by the multiset of block dimensions.
///
/// Block indices in this module are 1-based positions in the canonical
/// (non-decreasing) partition.
namespace symcensus::flags {

/// psi(v) = number of blocks of dimension v. Only nonzero entries are stored.
struct MultiplicityProfile {
  int n = 0;
  std::map<int, int> psi;

  [[nodiscard]] int operator()(int v) const;
  [[nodiscard]] int length() const;  // sum of multiplicities

  friend bool operator==(const MultiplicityProfile&, const MultiplicityProfile&) = default;
};

/// Transposition of two equal-dimension blocks, pairing coordinates in order.
struct InvolutionSpec {
  int block_a = 0;  // 1-based, block_a < block_b
  int block_b = 0;
  int block_size = 0;

  friend bool operator==(const InvolutionSpec&, const InvolutionSpec&) = default;
};

struct WeylFactor {
  int part_value = 0;
  int multiplicity = 0;

  friend bool operator==(const WeylFactor&, const WeylFactor&) = default;
};

/// N(H)/H for H = O(N_1) x ... x O(N_r): a product of symmetric groups, one
/// per distinct block dimension, permuting blocks of that dimension.
struct WeylDescriptor {
  std::vector<WeylFactor> factors;          // sorted by part_value
  BigInt order;                              // product of multiplicity!
  bool nontrivial = false;
  std::vector<InvolutionSpec> involutions;  // one per adjacent equal pair

  /// Factors with multiplicity >= 2, i.e. those a sign character can act on.
  [[nodiscard]] std::vector<WeylFactor> sign_factors() const;
};

enum class BorelKind { full, connected };

struct BorelDescriptor {
  Partition partition;
  BorelKind kind = BorelKind::full;
  std::vector<int> block_offsets;  // 0-based starting coordinate of each block
  int lie_dimension = 0;
};

/// A subspace {x : x|block_a == x|block_b} fixed by a block swap.
struct FixedSubspaceSpec {
  int block_a = 0;
  int block_b = 0;
  int codimension = 0;

  friend bool operator==(const FixedSubspaceSpec&, const FixedSubspaceSpec&) = default;
};

/// One delta in {0,1} per Weyl factor of multiplicity >= 2, in increasing
/// order of part value. All zeros is the trivial character.
struct SignRep {
  std::vector<int> deltas;

  [[nodiscard]] bool trivial() const;
};

struct ClassCensus {
  BigInt total, trivial_weyl, nontrivial_weyl;
  BigInt total_ge2, trivial_weyl_ge2, nontrivial_weyl_ge2;
};

struct BorelPair {
  std::string group;
  std::string stabilizer;

  friend bool operator==(const BorelPair&, const BorelPair&) = default;
};

[[nodiscard]] MultiplicityProfile profile(const Partition& p);
[[nodiscard]] std::vector<int> phi_indices(const Partition& p, int v);

/// O(n)-equivalence of the associated flags; throws DomainError if the
/// ambient dimensions differ.
[[nodiscard]] bool equivalent(const Partition& p1, const Partition& p2);

/// r! / prod_v psi(v)!
[[nodiscard]] BigInt orbit_length(const Partition& p);

[[nodiscard]] WeylDescriptor weyl(const Partition& p);

[[nodiscard]] BorelDescriptor borel(const Partition& p, BorelKind kind);

/// Counts of flag classes, split by whether the Weyl group is trivial.
/// Formula values are cross-checked by enumeration when n <= enumeration_limit.
[[nodiscard]] ClassCensus class_census(int n, int enumeration_limit = 60);

/// Connected compact groups acting transitively on S^{n-1}, as names.
[[nodiscard]] std::vector<BorelPair> borel_classification(int n);

/// Validates rho against p (length == number of sign factors, entries 0/1).
void check_sign_rep(const Partition& p, const SignRep& rho);

/// Fixed subspaces of every transposition inside a Weyl factor signed by rho.
[[nodiscard]] std::vector<FixedSubspaceSpec> nodal_subspaces(const Partition& p,
                                                             const SignRep& rho);

[[nodiscard]] std::string to_string(BorelKind kind);

}  // namespace symcensus::flags
