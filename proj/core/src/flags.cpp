#include "symcensus/flags.hpp"

#include <algorithm>
#include <string>

#include "symcensus/errors.hpp"
#include "symcensus/partitions.hpp"

namespace symcensus::flags {

namespace {

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::string group_name(const char* family, int k) {
  return std::string(family) + "(" + std::to_string(k) + ")";
}

}  // namespace

int MultiplicityProfile::operator()(int v) const {
  const auto it = psi.find(v);
  return it == psi.end() ? 0 : it->second;
}

int MultiplicityProfile::length() const {
  int r = 0;
  for (const auto& [value, mult] : psi) r += mult;
  return r;
}

std::vector<WeylFactor> WeylDescriptor::sign_factors() const {
  std::vector<WeylFactor> out;
  std::copy_if(factors.begin(), factors.end(), std::back_inserter(out),
               [](const WeylFactor& f) { return f.multiplicity >= 2; });
  return out;
}

bool SignRep::trivial() const {
  return std::all_of(deltas.begin(), deltas.end(), [](int d) { return d == 0; });
}

MultiplicityProfile profile(const Partition& p) {
  MultiplicityProfile prof;
  prof.n = p.n();
  for (int part : p.parts()) ++prof.psi[part];
  return prof;
}

std::vector<int> phi_indices(const Partition& p, int v) {
  std::vector<int> idx;
  for (std::size_t j = 0; j < p.length(); ++j) {
    if (p[j] == v) idx.push_back(static_cast<int>(j) + 1);
  }
  return idx;
}

bool equivalent(const Partition& p1, const Partition& p2) {
  if (p1.n() != p2.n()) {
    throw DomainError("equivalent: partitions of different dimensions " +
                      std::to_string(p1.n()) + " and " + std::to_string(p2.n()));
  }
  return profile(p1) == profile(p2);
}

BigInt orbit_length(const Partition& p) {
  BigInt denom = 1;
  for (const auto& [value, mult] : profile(p).psi) denom *= factorial(mult);
  const BigInt num = factorial(static_cast<int>(p.length()));
  if (num % denom != 0) {
    throw InconsistencyError("orbit_length: r! not divisible by prod psi!");
  }
  return num / denom;
}

WeylDescriptor weyl(const Partition& p) {
  WeylDescriptor w;
  w.order = 1;
  for (const auto& [value, mult] : profile(p).psi) {
    w.factors.push_back({value, mult});
    w.order *= factorial(mult);
  }
  for (std::size_t j = 0; j + 1 < p.length(); ++j) {
    if (p[j] == p[j + 1]) {
      w.involutions.push_back(
          {static_cast<int>(j) + 1, static_cast<int>(j) + 2, p[j]});
    }
  }
  w.nontrivial = w.order >= 2;
  return w;
}

BorelDescriptor borel(const Partition& p, BorelKind kind) {
  if (kind == BorelKind::connected && !p.all_parts_at_least(2)) {
    throw DomainError("borel: connected Borel subgroups need every block of dimension >= 2, got " +
                      p.to_string());
  }
  BorelDescriptor b{p, kind, {}, 0};
  const auto sums = p.prefix_sums();
  b.block_offsets.assign(sums.begin(), sums.end() - 1);
  for (int part : p.parts()) b.lie_dimension += part * (part - 1) / 2;
  return b;
}

ClassCensus class_census(int n, int enumeration_limit) {
  if (n < 1) throw DomainError("class_census: n must be >= 1");
  const auto c = partitions::counts(n);
  ClassCensus census{c.p, c.q, c.r, c.p_ge2, c.q_ge2, c.r_ge2};

  if (n <= enumeration_limit) {
    BigInt total = 0, nontrivial = 0, total_ge2 = 0, nontrivial_ge2 = 0;
    partitions::for_each_partition(n, 1, false, [&](std::span<const int> parts) {
      const bool repeats = std::adjacent_find(parts.begin(), parts.end()) != parts.end();
      const bool ge2 = parts.front() >= 2;
      ++total;
      if (repeats) ++nontrivial;
      if (ge2) {
        ++total_ge2;
        if (repeats) ++nontrivial_ge2;
      }
    });
    if (total != census.total || nontrivial != census.nontrivial_weyl ||
        total - nontrivial != census.trivial_weyl || total_ge2 != census.total_ge2 ||
        nontrivial_ge2 != census.nontrivial_weyl_ge2 ||
        total_ge2 - nontrivial_ge2 != census.trivial_weyl_ge2) {
      throw InconsistencyError("class_census(" + std::to_string(n) +
                               "): enumeration disagrees with counting formulas");
    }
  }
  return census;
}

std::vector<BorelPair> borel_classification(int n) {
  if (n < 2) {
    throw DomainError("borel_classification: n must be >= 2, got " + std::to_string(n));
  }
  std::vector<BorelPair> out;
  out.push_back({group_name("SO", n), group_name("SO", n - 1)});
  if (n == 7) out.push_back({"G2", "SU(3)"});
  if (n % 2 == 0) {
    const int s = n / 2;
    // SU(1) is trivial and does not act transitively on S^1.
    if (s >= 2) out.push_back({group_name("SU", s), group_name("SU", s - 1)});
    if (s % 2 == 0) out.push_back({group_name("Sp", s / 2), group_name("Sp", s / 2 - 1)});
  }
  if (n == 16) out.push_back({"Spin(9)", "Spin(7)"});
  if (n == 8) out.push_back({"Spin(7)", "G2"});
  return out;
}

void check_sign_rep(const Partition& p, const SignRep& rho) {
  const auto factors = weyl(p).sign_factors();
  if (rho.deltas.size() != factors.size()) {
    throw DomainError("sign representation has " + std::to_string(rho.deltas.size()) +
                      " entries but " + p.to_string() + " has " +
                      std::to_string(factors.size()) + " Weyl factor(s) with repeated blocks");
  }
  for (int d : rho.deltas) {
    if (d != 0 && d != 1) throw DomainError("sign representation entries must be 0 or 1");
  }
}

std::vector<FixedSubspaceSpec> nodal_subspaces(const Partition& p, const SignRep& rho) {
  const auto w = weyl(p);
  if (!w.nontrivial) {
    throw DomainError("nodal_subspaces: Weyl group of " + p.to_string() + " is trivial");
  }
  check_sign_rep(p, rho);
  const auto factors = w.sign_factors();
  std::vector<FixedSubspaceSpec> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (rho.deltas[i] == 0) continue;
    const auto blocks = phi_indices(p, factors[i].part_value);
    for (std::size_t a = 0; a < blocks.size(); ++a) {
      for (std::size_t b = a + 1; b < blocks.size(); ++b) {
        out.push_back({blocks[a], blocks[b], factors[i].part_value});
      }
    }
  }
  return out;
}

std::string to_string(BorelKind kind) {
  return kind == BorelKind::full ? "full" : "connected";
}

}  // namespace symcensus::flags
