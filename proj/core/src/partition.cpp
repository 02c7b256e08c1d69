#include "symcensus/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symcensus/errors.hpp"

namespace symcensus {

namespace {

void check_parts(const std::vector<int>& parts) {
  if (parts.empty()) {
    throw DomainError("partition must have at least one part");
  }
  for (int p : parts) {
    if (p < 1) {
      throw DomainError("partition parts must be positive, got " + std::to_string(p));
    }
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_parts(parts_);
  std::sort(parts_.begin(), parts_.end());
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(Sorted, std::vector<int> parts) : parts_(std::move(parts)) {
  n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_sorted(std::vector<int> parts) {
  check_parts(parts);
  if (!std::is_sorted(parts.begin(), parts.end())) {
    throw DomainError("parts are not in non-decreasing order");
  }
  return Partition(Sorted{}, std::move(parts));
}

std::vector<int> Partition::prefix_sums() const {
  std::vector<int> sums(parts_.size() + 1, 0);
  std::partial_sum(parts_.begin(), parts_.end(), sums.begin() + 1);
  return sums;
}

bool Partition::has_repeated_part() const noexcept {
  return std::adjacent_find(parts_.begin(), parts_.end()) != parts_.end();
}

bool Partition::all_parts_at_least(int k) const noexcept {
  return parts_.front() >= k;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) os << ',';
    os << parts_[i];
  }
  os << '}';
  return os.str();
}

}  // namespace symcensus
