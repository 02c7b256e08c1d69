#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "symcensus/flags.hpp"
#include "symcensus/partition.hpp"

/// Numerical check of the group structure of <H, K> at the Lie algebra
/// level. Block subgroups are realized by their algebras so(N_1) (+) ...,
/// closed under commutators, and transitivity on a sphere S(V') is read off
/// the rank of the tangent map X -> X x at a point x of V'.
namespace symcensus::lieverify {

inline constexpr double kDefaultTol = 1e-9;      // Gram-Schmidt acceptance
inline constexpr double kDefaultRankTol = 1e-8;  // singular-value threshold
inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

/// Skew-symmetric n x n matrices, orthonormal in the Frobenius inner product.
struct SkewBasis {
  int n = 0;
  std::vector<Eigen::MatrixXd> elements;

  [[nodiscard]] std::size_t size() const noexcept { return elements.size(); }
};

struct LieClosure {
  SkewBasis basis;
  int dimension = 0;
  int iterations = 0;  // basis elements whose brackets were taken
  double tol = kDefaultTol;
};

/// Half-open coordinate interval [begin, end).
struct CoordinateRange {
  int begin = 0;
  int end = 0;

  [[nodiscard]] int size() const noexcept { return end - begin; }
};

/// Orthonormal basis {(E_ab - E_ba)/sqrt2 : a < b in the same block}.
[[nodiscard]] SkewBasis block_algebra(const Partition& p);

/// Lie algebra generated by the union of two bases.
[[nodiscard]] LieClosure closure(const SkewBasis& b1, const SkewBasis& b2,
                                 double tol = kDefaultTol);

/// Whether the connected group of `c` acts transitively on the unit sphere of
/// the coordinate subspace `window`. Tested at e_begin and at a seeded
/// random unit vector; throws InconsistencyError if the two disagree,
/// IndeterminateError if a singular value is within [rank_tol/10, rank_tol).
[[nodiscard]] bool transitive_on(const LieClosure& c, CoordinateRange window,
                                 double rank_tol = kDefaultRankTol,
                                 std::uint64_t seed = kDefaultSeed);

/// Rank of {X x : X in basis} restricted to the window.
[[nodiscard]] int tangent_rank(const SkewBasis& basis, CoordinateRange window,
                               const Eigen::VectorXd& x, double rank_tol = kDefaultRankTol);

/// Permutation matrix exchanging two equal-size blocks coordinate by coordinate.
[[nodiscard]] Eigen::MatrixXd block_swap_matrix(const Partition& p,
                                                const flags::InvolutionSpec& inv);

/// T^2 == I and T X T^-1 stays in the block algebra of p for every basis X.
[[nodiscard]] bool involution_normalizes(const Partition& p, const flags::InvolutionSpec& inv,
                                         double tol = kDefaultTol);

/// Residual of X after projection onto span(basis).
[[nodiscard]] double span_residual(const SkewBasis& basis, const Eigen::MatrixXd& x);

/// {g X g^T : X in basis}; still orthonormal when g is orthogonal.
[[nodiscard]] SkewBasis conjugated(const SkewBasis& basis, const Eigen::MatrixXd& g);

/// Haar-like random orthogonal matrix from the QR of a seeded Gaussian matrix.
[[nodiscard]] Eigen::MatrixXd random_orthogonal(int n, std::uint64_t seed);

}  // namespace symcensus::lieverify
