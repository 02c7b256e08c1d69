#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace symcensus {

/// An integer partition n = N_1 + ... + N_r stored in canonical
/// non-decreasing order. Construction sorts the given parts, so
/// {3, 2, 2} and {2, 3, 2} produce the same value.
class Partition {
 public:
  /// Throws DomainError when `parts` is empty or contains a part < 1.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  /// Builds from parts already in canonical order; throws if they are not.
  static Partition from_sorted(std::vector<int> parts);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
  [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }
  [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }
  [[nodiscard]] int min_part() const noexcept { return parts_.front(); }

  /// Prefix sums 0 = s_0 < s_1 < ... < s_r = n (length r + 1).
  [[nodiscard]] std::vector<int> prefix_sums() const;
  [[nodiscard]] bool has_repeated_part() const noexcept;
  [[nodiscard]] bool all_parts_at_least(int k) const noexcept;

  /// "{2,2,3}"
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  struct Sorted {};
  Partition(Sorted, std::vector<int> parts);

  std::vector<int> parts_;
  int n_ = 0;
};

}  // namespace symcensus
