#pragma once

#include <optional>
#include <vector>

#include "symcensus/flags.hpp"
#include "symcensus/partition.hpp"

/// Pairs of block subgroups H = O(N^H_1) x ... and K = O(N^K_1) x ... in a
/// common orthonormal frame, and the group <H, K> they generate.
///
/// Sweeping both partitions' prefix sums splits [0, n) into alternating
/// segments. An agreement segment is a block shared by both sides; a window
/// is a minimal interval on which the two sides share no intermediate
/// prefix sum. <H, K> is O(part) on each agreement and the full O(size) on
/// each window.
namespace symcensus::pairs {

enum class SegmentKind { agreement, window };

struct Segment {
  SegmentKind kind = SegmentKind::agreement;
  int start = 0;               // first coordinate (0-based)
  int size = 0;
  std::vector<int> h_parts;    // parts of the first partition inside the segment
  std::vector<int> k_parts;    // parts of the second partition inside the segment
  int h_first_block = 0;       // 1-based index of the first block on each side
  int k_first_block = 0;

  [[nodiscard]] int end() const noexcept { return start + size; }
};

struct PairDecomposition {
  int n = 0;
  std::vector<Segment> segments;

  [[nodiscard]] std::vector<Segment> windows() const;
};

struct GroupFactor {
  int size = 0;
  SegmentKind origin = SegmentKind::agreement;

  friend bool operator==(const GroupFactor&, const GroupFactor&) = default;
};

struct GroupStructure {
  std::vector<GroupFactor> factors;
  flags::BorelKind kind = flags::BorelKind::full;
  int lie_dimension = 0;

  [[nodiscard]] bool transitive_on_sphere(int n) const;
};

/// A window together with a block transposition on one side that acts
/// inside the window and trivially on its complement.
struct WindowPlan {
  Segment window;
  int side = 1;  // 1: first partition, 2: second partition
  flags::InvolutionSpec involution;
};

/// Smallest 0 < n' < n that is a prefix sum of both partitions.
[[nodiscard]] std::optional<int> has_common_subpartition(const Partition& p1,
                                                         const Partition& p2);

[[nodiscard]] PairDecomposition decompose(const Partition& p1, const Partition& p2);

[[nodiscard]] GroupStructure generated_group(const Partition& p1, const Partition& p2,
                                             flags::BorelKind kind = flags::BorelKind::full);

[[nodiscard]] bool is_transitive_pair(const Partition& p1, const Partition& p2);

/// First window in which one side has two equal blocks; side 1 is
/// preferred when both qualify. Throws DomainError when p1 == p2.
[[nodiscard]] std::optional<WindowPlan> first_window_with_involution(const Partition& p1,
                                                                     const Partition& p2);

[[nodiscard]] const char* to_string(SegmentKind kind);

}  // namespace symcensus::pairs
