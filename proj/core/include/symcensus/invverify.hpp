#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "symcensus/flags.hpp"
#include "symcensus/pairs.hpp"
#include "symcensus/partition.hpp"

/// Bounded-degree polynomial model of the fixed-point spaces E^{(H, rho)}.
///
/// Polynomials in x_1..x_n are sparse maps from exponent vectors to
/// coefficients. H-invariants are polynomials in the block norms
/// q_j = |x restricted to block j|^2; a set of signed block transpositions
/// then cuts out the subspace on which each transposition acts by its sign.
namespace symcensus::invverify {

inline constexpr int kMaxDegree = 8;
inline constexpr double kDefaultRankTol = 1e-8;

using Exponent = std::vector<int>;
using Polynomial = std::map<Exponent, double>;

struct PolySubspace {
  int n = 0;
  int degree_cap = 0;
  std::vector<Polynomial> basis;  // linearly independent
  int dim = 0;
};

/// A block transposition tau with the value rho(tau) in {+1, -1}.
struct SignedInvolution {
  flags::InvolutionSpec involution;
  int sign = -1;
};

/// Span of q_1^a_1 ... q_r^a_r with 2 * sum(a) <= d, constants included.
[[nodiscard]] PolySubspace invariant_space(const Partition& p, int d);

/// Subspace of invariant_space(p, d) on which each Weyl factor acts by
/// sign^delta: antisymmetrized over the factor's blocks when delta = 1,
/// symmetrized when delta = 0.
[[nodiscard]] PolySubspace intertwining_space(const Partition& p, const flags::SignRep& rho,
                                              int d);

/// Fixed space of <H, generators> under (g f)(x) = rho(g) f(g x).
[[nodiscard]] PolySubspace fixed_space(const Partition& p,
                                       const std::vector<SignedInvolution>& generators, int d);

/// dim U + dim W - rank [U | W]. Throws IndeterminateError when a singular
/// value lies in [rank_tol/10, rank_tol).
[[nodiscard]] int intersection_dim(const PolySubspace& s1, const PolySubspace& s2,
                                   double rank_tol = kDefaultRankTol);

/// Independent oracle: dimension of the polynomials of degree <= d killed by
/// every in-block derivation x_a d/dx_b - x_b d/dx_a and even in each block.
/// Dense; intended for n <= 4, d <= 4.
[[nodiscard]] int infinitesimal_invariant_dim(const Partition& p, int d,
                                              double rank_tol = kDefaultRankTol);

/// Number of exponent vectors a in N^r with 2 * sum(a) <= d.
[[nodiscard]] long long invariant_dim_formula(int blocks, int d);

[[nodiscard]] double evaluate(const Polynomial& f, const Eigen::VectorXd& x);

/// Largest relative violation of the intended symmetry over random points:
/// f(h x) == f(x) for random block-orthogonal h and f(tau x) == sign f(x).
[[nodiscard]] double invariance_residual(const Partition& p,
                                         const std::vector<SignedInvolution>& generators,
                                         const PolySubspace& space, int samples = 8,
                                         std::uint64_t seed = 0x1dea5ULL);

struct VerifyReport {
  Partition p1;
  Partition p2;
  int degree = 0;
  pairs::WindowPlan plan;
  std::vector<SignedInvolution> generators1;
  std::vector<SignedInvolution> generators2;
  int dim1 = 0;
  int dim2 = 0;
  int intersection = 0;
  int control_dim1 = 0;  // trivial-rho (plain H-invariant) spaces
  int control_dim2 = 0;
  int control_intersection = 0;
  double residual1 = 0.0;
  double residual2 = 0.0;
  bool passed = false;
};

/// Builds <H, tau> and <K, tau'> from the first window carrying an equal pair
/// (tau signed -1) and checks that their fixed spaces meet only in zero,
/// while the plain invariant spaces share at least the radial tower.
/// Throws DomainError if p1 == p2 or no window carries an equal pair.
[[nodiscard]] VerifyReport verify_pair(const Partition& p1, const Partition& p2, int d);

}  // namespace symcensus::invverify
