#pragma once

#include <vector>

#include "symcensus/partition.hpp"
#include "symcensus/partitions.hpp"

namespace testing_support {

inline std::vector<int> parts_of(const symcensus::Partition& p) {
  return {p.parts().begin(), p.parts().end()};
}

// All partitions of n with parts >= 2.
inline std::vector<symcensus::Partition> partitions_ge2(int n) {
  return symcensus::partitions::enumerate(n, 2, false);
}

}  // namespace testing_support
