#include "symcensus/pairs.hpp"

#include <algorithm>
#include <string>

#include "symcensus/errors.hpp"

namespace symcensus::pairs {

namespace {

void require_same_n(const Partition& p1, const Partition& p2, const char* what) {
  if (p1.n() != p2.n()) {
    throw DomainError(std::string(what) + ": partitions of different dimensions " +
                      std::to_string(p1.n()) + " and " + std::to_string(p2.n()));
  }
}

void require_pair(const Partition& p1, const Partition& p2, const char* what) {
  require_same_n(p1, p2, what);
  for (const Partition* p : {&p1, &p2}) {
    if (!p->all_parts_at_least(2)) {
      throw DomainError(std::string(what) + ": every block must have dimension >= 2, got " +
                        p->to_string());
    }
  }
}

// Index of the first of two equal adjacent parts.
std::optional<int> equal_pair_in(const std::vector<int>& parts) {
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
    if (parts[j] == parts[j + 1]) return static_cast<int>(j);
  }
  return std::nullopt;
}

}  // namespace

std::vector<Segment> PairDecomposition::windows() const {
  std::vector<Segment> out;
  std::copy_if(segments.begin(), segments.end(), std::back_inserter(out),
               [](const Segment& s) { return s.kind == SegmentKind::window; });
  return out;
}

bool GroupStructure::transitive_on_sphere(int n) const {
  return factors.size() == 1 && factors.front().size == n;
}

std::optional<int> has_common_subpartition(const Partition& p1, const Partition& p2) {
  require_same_n(p1, p2, "has_common_subpartition");
  const auto s1 = p1.prefix_sums();
  const auto s2 = p2.prefix_sums();
  // Both lists are strictly increasing; intersect, skipping 0 and n.
  std::size_t i = 1, j = 1;
  while (i + 1 < s1.size() && j + 1 < s2.size()) {
    if (s1[i] == s2[j]) return s1[i];
    if (s1[i] < s2[j]) ++i; else ++j;
  }
  return std::nullopt;
}

PairDecomposition decompose(const Partition& p1, const Partition& p2) {
  require_pair(p1, p2, "decompose");
  const auto h = p1.parts();
  const auto k = p2.parts();
  PairDecomposition d{p1.n(), {}};

  std::size_t i = 0, j = 0;
  int pos = 0;
  while (i < h.size() && j < k.size()) {
    Segment seg;
    seg.start = pos;
    seg.h_first_block = static_cast<int>(i) + 1;
    seg.k_first_block = static_cast<int>(j) + 1;
    if (h[i] == k[j]) {
      seg.kind = SegmentKind::agreement;
      seg.size = h[i];
      seg.h_parts = {h[i]};
      seg.k_parts = {k[j]};
      ++i;
      ++j;
    } else {
      seg.kind = SegmentKind::window;
      int sum_h = pos + h[i];
      int sum_k = pos + k[j];
      seg.h_parts.push_back(h[i++]);
      seg.k_parts.push_back(k[j++]);
      // Close at the first re-coincidence of prefix sums.
      while (sum_h != sum_k) {
        if (sum_h < sum_k) {
          sum_h += h[i];
          seg.h_parts.push_back(h[i++]);
        } else {
          sum_k += k[j];
          seg.k_parts.push_back(k[j++]);
        }
      }
      seg.size = sum_h - pos;
    }
    pos += seg.size;
    d.segments.push_back(std::move(seg));
  }
  return d;
}

GroupStructure generated_group(const Partition& p1, const Partition& p2, flags::BorelKind kind) {
  const auto d = decompose(p1, p2);
  GroupStructure g;
  g.kind = kind;
  for (const auto& seg : d.segments) {
    g.factors.push_back({seg.size, seg.kind});
    g.lie_dimension += seg.size * (seg.size - 1) / 2;
  }
  return g;
}

bool is_transitive_pair(const Partition& p1, const Partition& p2) {
  require_pair(p1, p2, "is_transitive_pair");
  const bool by_prefix = p1 != p2 && !has_common_subpartition(p1, p2).has_value();
  const auto g = generated_group(p1, p2);
  const bool by_structure = g.factors.size() == 1 &&
                            g.factors.front().origin == SegmentKind::window &&
                            g.factors.front().size == p1.n();
  if (by_prefix != by_structure) {
    throw InconsistencyError("is_transitive_pair: prefix-sum test and group structure disagree for " +
                             p1.to_string() + ", " + p2.to_string());
  }
  return by_prefix;
}

std::optional<WindowPlan> first_window_with_involution(const Partition& p1, const Partition& p2) {
  require_pair(p1, p2, "first_window_with_involution");
  if (p1 == p2) {
    throw DomainError("first_window_with_involution: partitions are equal");
  }
  for (const auto& w : decompose(p1, p2).windows()) {
    if (auto at = equal_pair_in(w.h_parts)) {
      const int a = w.h_first_block + *at;
      return WindowPlan{w, 1, {a, a + 1, w.h_parts[*at]}};
    }
    if (auto at = equal_pair_in(w.k_parts)) {
      const int a = w.k_first_block + *at;
      return WindowPlan{w, 2, {a, a + 1, w.k_parts[*at]}};
    }
  }
  return std::nullopt;
}

const char* to_string(SegmentKind kind) {
  return kind == SegmentKind::agreement ? "agreement" : "window";
}

}  // namespace symcensus::pairs
