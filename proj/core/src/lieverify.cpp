#include "symcensus/lieverify.hpp"

#include <cmath>
#include <random>
#include <string>

#include "symcensus/errors.hpp"

namespace symcensus::lieverify {

namespace {

double frobenius(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a.array() * b.array()).sum();
}

void require_skew(const SkewBasis& b, double tol) {
  for (const auto& x : b.elements) {
    if (x.rows() != b.n || x.cols() != b.n) {
      throw DomainError("basis element has wrong shape");
    }
    if ((x + x.transpose()).norm() > tol) {
      throw DomainError("basis element is not skew-symmetric");
    }
  }
}

// Incremental orthonormal basis for a subspace of so(n).
class SkewSpan {
 public:
  SkewSpan(int n, double tol) : n_(n), tol_(tol) {}

  // Appends the component of x orthogonal to the span when its norm
  // exceeds tol. Returns whether the span grew.
  bool add(const Eigen::MatrixXd& x) {
    Eigen::MatrixXd r = x;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : elements_) r -= frobenius(r, b) * b;
    }
    r = 0.5 * (r - r.transpose());
    const double norm = r.norm();
    if (norm <= tol_) return false;
    elements_.push_back(r / norm);
    return true;
  }

  [[nodiscard]] const std::vector<Eigen::MatrixXd>& elements() const { return elements_; }
  [[nodiscard]] SkewBasis take() && { return {n_, std::move(elements_)}; }

 private:
  int n_;
  double tol_;
  std::vector<Eigen::MatrixXd> elements_;
};

Eigen::VectorXd random_unit(int size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(size);
  for (int i = 0; i < size; ++i) v(i) = gauss(rng);
  return v / v.norm();
}

}  // namespace

SkewBasis block_algebra(const Partition& p) {
  if (!p.all_parts_at_least(2)) {
    throw DomainError("block_algebra: every block must have dimension >= 2, got " +
                      p.to_string());
  }
  const int n = p.n();
  SkewBasis basis{n, {}};
  const double scale = 1.0 / std::sqrt(2.0);
  int offset = 0;
  for (int part : p.parts()) {
    for (int a = offset; a < offset + part; ++a) {
      for (int b = a + 1; b < offset + part; ++b) {
        Eigen::MatrixXd x = Eigen::MatrixXd::Zero(n, n);
        x(a, b) = scale;
        x(b, a) = -scale;
        basis.elements.push_back(std::move(x));
      }
    }
    offset += part;
  }
  return basis;
}

LieClosure closure(const SkewBasis& b1, const SkewBasis& b2, double tol) {
  if (b1.n != b2.n) {
    throw DomainError("closure: bases act on different dimensions " + std::to_string(b1.n) +
                      " and " + std::to_string(b2.n));
  }
  if (!(tol > 0.0)) throw DomainError("closure: tol must be positive");
  require_skew(b1, tol);
  require_skew(b2, tol);

  const int n = b1.n;
  const int max_dim = n * (n - 1) / 2;
  SkewSpan span(n, tol);
  for (const auto& x : b1.elements) span.add(x);
  for (const auto& x : b2.elements) span.add(x);

  // Each element is bracketed once against every earlier element; elements
  // appended meanwhile are reached later in the same sweep.
  int iterations = 0;
  for (std::size_t i = 0; i < span.elements().size(); ++i) {
    if (++iterations > 10 * std::max(max_dim, 1)) {
      throw InconsistencyError("closure did not converge");
    }
    for (std::size_t j = 0; j < i; ++j) {
      const Eigen::MatrixXd& xi = span.elements()[i];
      const Eigen::MatrixXd& xj = span.elements()[j];
      const Eigen::MatrixXd bracket = xi * xj - xj * xi;
      span.add(bracket);
    }
    if (static_cast<int>(span.elements().size()) > max_dim) {
      throw InconsistencyError("closure exceeded dim so(n); tolerance too loose");
    }
  }

  LieClosure c;
  c.basis = std::move(span).take();
  c.dimension = static_cast<int>(c.basis.size());
  c.iterations = iterations;
  c.tol = tol;
  return c;
}

int tangent_rank(const SkewBasis& basis, CoordinateRange window, const Eigen::VectorXd& x,
                 double rank_tol) {
  const int m = window.size();
  if (basis.elements.empty()) return 0;
  Eigen::MatrixXd tangents(m, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto& el = basis.elements[k];
    tangents.col(static_cast<Eigen::Index>(k)) =
        el.block(window.begin, window.begin, m, m) * x;
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(tangents);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double s = svd.singularValues()(i);
    if (s >= rank_tol) {
      ++rank;
    } else if (s >= rank_tol / 10.0) {
      throw IndeterminateError("tangent rank: singular value " + std::to_string(s) +
                               " is inside the ambiguity band; tighten tolerances");
    }
  }
  return rank;
}

bool transitive_on(const LieClosure& c, CoordinateRange window, double rank_tol,
                   std::uint64_t seed) {
  const int n = c.basis.n;
  if (window.begin < 0 || window.end > n || window.size() < 1) {
    throw DomainError("transitive_on: window [" + std::to_string(window.begin) + "," +
                      std::to_string(window.end) + ") is not inside [0," + std::to_string(n) +
                      ")");
  }
  const int m = window.size();
  const double leak_tol = 10.0 * c.tol;
  for (const auto& x : c.basis.elements) {
    double leak = 0.0;
    for (int i = window.begin; i < window.end; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j >= window.begin && j < window.end) continue;
        leak = std::max({leak, std::abs(x(i, j)), std::abs(x(j, i))});
      }
    }
    if (leak > leak_tol) {
      throw DomainError("transitive_on: window subspace is not invariant under the closure");
    }
  }

  Eigen::VectorXd e = Eigen::VectorXd::Zero(m);
  e(0) = 1.0;
  const bool at_basis_vector = tangent_rank(c.basis, window, e, rank_tol) == m - 1;
  const bool at_random = tangent_rank(c.basis, window, random_unit(m, seed), rank_tol) == m - 1;
  if (at_basis_vector != at_random) {
    throw InconsistencyError("transitive_on: tangent rank differs between test points");
  }
  return at_basis_vector;
}

Eigen::MatrixXd block_swap_matrix(const Partition& p, const flags::InvolutionSpec& inv) {
  const int r = static_cast<int>(p.length());
  if (inv.block_a < 1 || inv.block_b > r || inv.block_a >= inv.block_b) {
    throw DomainError("involution blocks must satisfy 1 <= a < b <= r");
  }
  const int size_a = p[static_cast<std::size_t>(inv.block_a - 1)];
  const int size_b = p[static_cast<std::size_t>(inv.block_b - 1)];
  if (size_a != size_b || size_a != inv.block_size) {
    throw DomainError("involution swaps blocks of unequal dimension in " + p.to_string());
  }
  const auto offsets = p.prefix_sums();
  const int oa = offsets[static_cast<std::size_t>(inv.block_a - 1)];
  const int ob = offsets[static_cast<std::size_t>(inv.block_b - 1)];
  Eigen::MatrixXd t = Eigen::MatrixXd::Identity(p.n(), p.n());
  for (int i = 0; i < size_a; ++i) {
    t(oa + i, oa + i) = 0.0;
    t(ob + i, ob + i) = 0.0;
    t(oa + i, ob + i) = 1.0;
    t(ob + i, oa + i) = 1.0;
  }
  return t;
}

double span_residual(const SkewBasis& basis, const Eigen::MatrixXd& x) {
  Eigen::MatrixXd r = x;
  for (const auto& b : basis.elements) r -= frobenius(r, b) * b;
  return r.norm();
}

bool involution_normalizes(const Partition& p, const flags::InvolutionSpec& inv, double tol) {
  const Eigen::MatrixXd t = block_swap_matrix(p, inv);
  const int n = p.n();
  if ((t * t - Eigen::MatrixXd::Identity(n, n)).norm() > tol) return false;
  const SkewBasis algebra = block_algebra(p);
  for (const auto& x : algebra.elements) {
    // T is a symmetric permutation, so T^-1 == T^T == T.
    if (span_residual(algebra, t * x * t.transpose()) > tol) return false;
  }
  return true;
}

SkewBasis conjugated(const SkewBasis& basis, const Eigen::MatrixXd& g) {
  SkewBasis out{basis.n, {}};
  out.elements.reserve(basis.size());
  for (const auto& x : basis.elements) out.elements.push_back(g * x * g.transpose());
  return out;
}

Eigen::MatrixXd random_orthogonal(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = gauss(rng);
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
  Eigen::MatrixXd q = qr.householderQ();
  // Fix column signs so the distribution does not depend on QR conventions.
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    if (r(j, j) < 0) q.col(j) *= -1.0;
  }
  return q;
}

}  // namespace symcensus::lieverify
