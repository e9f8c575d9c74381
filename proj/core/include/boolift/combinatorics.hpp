#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace boolift {

inline int ceil_log2(std::uint64_t v) {
  return v <= 1 ? 0 : 64 - std::countl_zero(v - 1);
}

inline bool is_power_of_two(std::uint64_t v) { return v && !(v & (v - 1)); }

inline bool is_submask(std::uint64_t sub, std::uint64_t super) {
  return (sub & ~super) == 0;
}

/// C(n, k) with saturation at UINT64_MAX.
std::uint64_t binomial(int n, int k);

/// Mask <-> 1-based subset encoding (x_1 is bit 0).
std::vector<int> mask_to_subset(std::uint64_t mask);
std::uint64_t subset_to_mask(const std::vector<int>& subset);

/// Iterates k-subsets of {0..n-1} in lexicographic order of their sorted
/// index tuples.
class Combinations {
 public:
  Combinations(int n, int k);
  const std::vector<int>& current() const { return idx_; }
  bool done() const { return done_; }
  void next();

 private:
  int n_;
  int k_;
  std::vector<int> idx_;
  bool done_;
};

}  // namespace boolift
