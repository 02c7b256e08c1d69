#include "symcensus/invverify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <set>
#include <string>

#include "symcensus/errors.hpp"
#include "symcensus/lieverify.hpp"

namespace symcensus::invverify {

namespace {

void require_degree(int d) {
  if (d < 2 || d % 2 != 0) {
    throw DomainError("degree must be a positive even integer, got " + std::to_string(d));
  }
  if (d > kMaxDegree) {
    throw DomainError("degree " + std::to_string(d) + " exceeds the cap " +
                      std::to_string(kMaxDegree));
  }
}

void require_blocks(const Partition& p) {
  if (!p.all_parts_at_least(2)) {
    throw DomainError("every block must have dimension >= 2, got " + p.to_string());
  }
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// All exponent vectors of length `len` with entry sum <= max_sum, lexicographic.
void exponents_up_to(int len, int max_sum, std::vector<Exponent>& out) {
  Exponent e(static_cast<std::size_t>(len), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == len) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[static_cast<std::size_t>(pos)] = k;
      self(self, pos + 1, left - k);
    }
    e[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, max_sum);
}

// Exponent vectors of length `len` with entry sum exactly `total`.
std::vector<Exponent> compositions(int len, int total) {
  std::vector<Exponent> all;
  exponents_up_to(len, total, all);
  std::erase_if(all, [total](const Exponent& e) {
    int s = 0;
    for (int v : e) s += v;
    return s != total;
  });
  return all;
}

// Expansion of prod_j q_j^{alpha_j} in the monomials of x.
Polynomial expand_block_norms(const Partition& p, const Exponent& alpha) {
  Polynomial acc{{Exponent(static_cast<std::size_t>(p.n()), 0), 1.0}};
  int offset = 0;
  for (std::size_t j = 0; j < p.length(); ++j) {
    const int size = p[j];
    const int power = alpha[j];
    if (power > 0) {
      // (x_1^2 + ... + x_m^2)^k = sum k!/prod k_i! prod x_i^{2 k_i}
      Polynomial next;
      for (const Exponent& ks : compositions(size, power)) {
        double coeff = factorial(power);
        for (int k : ks) coeff /= factorial(k);
        for (const auto& [mono, c] : acc) {
          Exponent m = mono;
          for (int i = 0; i < size; ++i) {
            m[static_cast<std::size_t>(offset + i)] += 2 * ks[static_cast<std::size_t>(i)];
          }
          next[m] += c * coeff;
        }
      }
      acc = std::move(next);
    }
    offset += size;
  }
  return acc;
}

void check_generator(const Partition& p, const SignedInvolution& g) {
  const auto& inv = g.involution;
  const int r = static_cast<int>(p.length());
  if (inv.block_a < 1 || inv.block_b > r || inv.block_a >= inv.block_b ||
      p[static_cast<std::size_t>(inv.block_a - 1)] != p[static_cast<std::size_t>(inv.block_b - 1)]) {
    throw DomainError("generator does not swap two equal blocks of " + p.to_string());
  }
  if (g.sign != 1 && g.sign != -1) throw DomainError("generator sign must be +1 or -1");
}

// Orthonormal basis of the column space of m; throws if columns are dependent.
Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& m, double rank_tol) {
  if (m.cols() == 0) return m;
  Eigen::MatrixXd scaled = m;
  for (Eigen::Index c = 0; c < scaled.cols(); ++c) scaled.col(c).normalize();
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(scaled, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) < rank_tol) {
    throw InconsistencyError("subspace basis is numerically dependent");
  }
  return svd.matrixU();
}

Eigen::MatrixXd block_orthogonal(const Partition& p, std::uint64_t seed) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(p.n(), p.n());
  int offset = 0;
  for (std::size_t j = 0; j < p.length(); ++j) {
    h.block(offset, offset, p[j], p[j]) = lieverify::random_orthogonal(p[j], seed + j);
    offset += p[j];
  }
  return h;
}

// First adjacent equal pair on `side`, preferring one inside `window`.
std::optional<flags::InvolutionSpec> companion_involution(const Partition& p,
                                                          const pairs::Segment& window,
                                                          bool window_parts_of_h) {
  const auto& parts = window_parts_of_h ? window.h_parts : window.k_parts;
  const int first = window_parts_of_h ? window.h_first_block : window.k_first_block;
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
    if (parts[j] == parts[j + 1]) {
      const int a = first + static_cast<int>(j);
      return flags::InvolutionSpec{a, a + 1, parts[j]};
    }
  }
  const auto w = flags::weyl(p);
  if (!w.involutions.empty()) return w.involutions.front();
  return std::nullopt;
}

}  // namespace

long long invariant_dim_formula(int blocks, int d) {
  // C(blocks + d/2, blocks)
  const int k = d / 2;
  long long c = 1;
  for (int i = 1; i <= blocks; ++i) c = c * (k + i) / i;
  return c;
}

PolySubspace fixed_space(const Partition& p, const std::vector<SignedInvolution>& generators,
                         int d) {
  require_blocks(p);
  require_degree(d);
  for (const auto& g : generators) check_generator(p, g);

  const int r = static_cast<int>(p.length());
  std::vector<Exponent> alphas;
  exponents_up_to(r, d / 2, alphas);

  // Each generator permutes block-norm monomials by swapping two exponents.
  // On an orbit the fixed vector is the signed orbit sum, unless the signs
  // are inconsistent, in which case the orbit contributes nothing.
  PolySubspace space{p.n(), d, {}, 0};
  std::set<Exponent> seen;
  for (const Exponent& start : alphas) {
    if (seen.contains(start)) continue;
    std::map<Exponent, int> sign_of{{start, 1}};
    std::deque<Exponent> queue{start};
    bool consistent = true;
    while (!queue.empty()) {
      const Exponent cur = queue.front();
      queue.pop_front();
      const int s = sign_of.at(cur);
      for (const auto& g : generators) {
        Exponent img = cur;
        std::swap(img[static_cast<std::size_t>(g.involution.block_a - 1)],
                  img[static_cast<std::size_t>(g.involution.block_b - 1)]);
        // f(tau x) = sign f(x) forces coeff(img) = sign * coeff(cur).
        const int want = s * g.sign;
        const auto [it, inserted] = sign_of.emplace(img, want);
        if (inserted) {
          queue.push_back(img);
        } else if (it->second != want) {
          consistent = false;
        }
      }
    }
    for (const auto& [alpha, s] : sign_of) seen.insert(alpha);
    if (!consistent) continue;

    Polynomial orbit_sum;
    for (const auto& [alpha, s] : sign_of) {
      for (const auto& [mono, c] : expand_block_norms(p, alpha)) orbit_sum[mono] += s * c;
    }
    space.basis.push_back(std::move(orbit_sum));
  }
  space.dim = static_cast<int>(space.basis.size());
  return space;
}

PolySubspace invariant_space(const Partition& p, int d) {
  PolySubspace s = fixed_space(p, {}, d);
  if (p.n() <= 4 && d <= 4) {
    const int oracle = infinitesimal_invariant_dim(p, d);
    if (oracle != s.dim) {
      throw InconsistencyError("invariant_space" + p.to_string() + ": block-norm dimension " +
                               std::to_string(s.dim) + " != infinitesimal oracle " +
                               std::to_string(oracle));
    }
  }
  return s;
}

PolySubspace intertwining_space(const Partition& p, const flags::SignRep& rho, int d) {
  flags::check_sign_rep(p, rho);
  const auto factors = flags::weyl(p).sign_factors();
  std::vector<SignedInvolution> gens;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto blocks = flags::phi_indices(p, factors[i].part_value);
    const int sign = rho.deltas[i] == 1 ? -1 : 1;
    // Adjacent transpositions generate the whole symmetric group on the factor.
    for (std::size_t b = 0; b + 1 < blocks.size(); ++b) {
      gens.push_back({{blocks[b], blocks[b + 1], factors[i].part_value}, sign});
    }
  }
  return fixed_space(p, gens, d);
}

int intersection_dim(const PolySubspace& s1, const PolySubspace& s2, double rank_tol) {
  if (s1.n != s2.n || s1.degree_cap != s2.degree_cap) {
    throw DomainError("intersection_dim: subspaces live in different polynomial spaces");
  }
  if (s1.dim == 0 || s2.dim == 0) return 0;

  std::map<Exponent, Eigen::Index> row_of;
  for (const auto* s : {&s1, &s2}) {
    for (const auto& f : s->basis) {
      for (const auto& [mono, c] : f) row_of.emplace(mono, 0);
    }
  }
  Eigen::Index next = 0;
  for (auto& [mono, row] : row_of) row = next++;

  auto dense = [&](const PolySubspace& s) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(next, s.dim);
    for (int col = 0; col < s.dim; ++col) {
      for (const auto& [mono, c] : s.basis[static_cast<std::size_t>(col)]) {
        m(row_of.at(mono), col) = c;
      }
    }
    return m;
  };
  const Eigen::MatrixXd q1 = orthonormal_columns(dense(s1), rank_tol);
  const Eigen::MatrixXd q2 = orthonormal_columns(dense(s2), rank_tol);
  Eigen::MatrixXd joint(next, q1.cols() + q2.cols());
  joint << q1, q2;

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(joint);
  int rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double sv = svd.singularValues()(i);
    if (sv >= rank_tol) {
      ++rank;
    } else if (sv >= rank_tol / 10.0) {
      throw IndeterminateError("intersection_dim: singular value " + std::to_string(sv) +
                               " is inside the ambiguity band");
    }
  }
  return s1.dim + s2.dim - rank;
}

int infinitesimal_invariant_dim(const Partition& p, int d, double rank_tol) {
  require_degree(d);
  const int n = p.n();
  std::vector<Exponent> monos;
  exponents_up_to(n, d, monos);
  if (monos.size() > 500) {
    throw DomainError("infinitesimal oracle: too many monomials for a dense computation");
  }
  std::map<Exponent, Eigen::Index> col_of;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    col_of.emplace(monos[i], static_cast<Eigen::Index>(i));
  }

  struct Entry {
    Eigen::Index row, col;
    double value;
  };
  std::vector<Entry> entries;
  Eigen::Index row = 0;
  const auto offsets = p.prefix_sums();
  for (std::size_t j = 0; j < p.length(); ++j) {
    const int lo = offsets[j];
    const int hi = offsets[j + 1];
    for (int a = lo; a < hi; ++a) {
      for (int b = a + 1; b < hi; ++b) {
        // (x_a d_b - x_b d_a) maps each monomial to at most two monomials of
        // the same degree; one block of rows per output monomial.
        std::map<Exponent, Eigen::Index> out_row;
        for (const auto& m : monos) out_row.emplace(m, row++);
        for (const auto& m : monos) {
          const Eigen::Index col = col_of.at(m);
          const auto ua = static_cast<std::size_t>(a);
          const auto ub = static_cast<std::size_t>(b);
          if (m[ub] > 0) {
            Exponent img = m;
            img[ub] -= 1;
            img[ua] += 1;
            entries.push_back({out_row.at(img), col, static_cast<double>(m[ub])});
          }
          if (m[ua] > 0) {
            Exponent img = m;
            img[ua] -= 1;
            img[ub] += 1;
            entries.push_back({out_row.at(img), col, -static_cast<double>(m[ua])});
          }
        }
      }
    }
    // Reflection of the block's first coordinate: odd powers must vanish.
    for (const auto& m : monos) {
      if (m[static_cast<std::size_t>(lo)] % 2 != 0) {
        entries.push_back({row++, col_of.at(m), 1.0});
      }
    }
  }
  if (row == 0) return static_cast<int>(monos.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(row, static_cast<Eigen::Index>(monos.size()));
  for (const auto& t : entries) a(t.row, t.col) += t.value;

  const Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
  const auto& sv_all = svd.singularValues();
  int null_dim = static_cast<int>(monos.size() - static_cast<std::size_t>(sv_all.size()));
  for (Eigen::Index i = 0; i < sv_all.size(); ++i) {
    const double sv = sv_all(i);
    if (sv < rank_tol / 10.0) {
      ++null_dim;
    } else if (sv < rank_tol) {
      throw IndeterminateError("infinitesimal oracle: ambiguous singular value");
    }
  }
  return null_dim;
}

double evaluate(const Polynomial& f, const Eigen::VectorXd& x) {
  double total = 0.0;
  for (const auto& [mono, c] : f) {
    double term = c;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] != 0) term *= std::pow(x(static_cast<Eigen::Index>(i)), mono[i]);
    }
    total += term;
  }
  return total;
}

double invariance_residual(const Partition& p, const std::vector<SignedInvolution>& generators,
                           const PolySubspace& space, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd x(p.n());
    for (int i = 0; i < p.n(); ++i) x(i) = gauss(rng);
    const Eigen::MatrixXd h = block_orthogonal(p, seed + 1000u * static_cast<std::uint64_t>(s));
    const Eigen::VectorXd hx = h * x;
    for (const auto& f : space.basis) {
      const double fx = evaluate(f, x);
      const double scale = 1.0 + std::abs(fx);
      worst = std::max(worst, std::abs(evaluate(f, hx) - fx) / scale);
      for (const auto& g : generators) {
        const Eigen::VectorXd tx = lieverify::block_swap_matrix(p, g.involution) * x;
        worst = std::max(worst, std::abs(evaluate(f, tx) - g.sign * fx) / scale);
      }
    }
  }
  return worst;
}

VerifyReport verify_pair(const Partition& p1, const Partition& p2, int d) {
  require_degree(d);
  if (p1 == p2) throw DomainError("verify_pair: partitions are equal");
  const auto plan = pairs::first_window_with_involution(p1, p2);
  if (!plan) {
    throw DomainError("verify_pair: no window of " + p1.to_string() + ", " + p2.to_string() +
                      " carries a pair of equal blocks");
  }

  VerifyReport rep{p1, p2, d, *plan, {}, {}, 0, 0, 0, 0, 0, 0, 0.0, 0.0, false};
  const SignedInvolution tau{plan->involution, -1};
  if (plan->side == 1) {
    rep.generators1.push_back(tau);
    if (auto other = companion_involution(p2, plan->window, false)) {
      rep.generators2.push_back({*other, -1});
    }
  } else {
    rep.generators2.push_back(tau);
    if (auto other = companion_involution(p1, plan->window, true)) {
      rep.generators1.push_back({*other, -1});
    }
  }

  const PolySubspace s1 = fixed_space(p1, rep.generators1, d);
  const PolySubspace s2 = fixed_space(p2, rep.generators2, d);
  rep.dim1 = s1.dim;
  rep.dim2 = s2.dim;
  rep.intersection = intersection_dim(s1, s2);
  rep.residual1 = invariance_residual(p1, rep.generators1, s1);
  rep.residual2 = invariance_residual(p2, rep.generators2, s2);

  const PolySubspace c1 = fixed_space(p1, {}, d);
  const PolySubspace c2 = fixed_space(p2, {}, d);
  rep.control_dim1 = c1.dim;
  rep.control_dim2 = c2.dim;
  rep.control_intersection = intersection_dim(c1, c2);

  rep.passed = rep.intersection == 0 && rep.dim1 >= 1 && rep.dim2 >= 1 &&
               rep.control_intersection >= d / 2 + 1 && rep.residual1 <= 1e-8 &&
               rep.residual2 <= 1e-8;
  return rep;
}

}  // namespace symcensus::invverify
