#include "boolift/combinatorics.hpp"

#include <limits>

namespace boolift {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::vector<int> mask_to_subset(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i + 1);
  return out;
}

std::uint64_t subset_to_mask(const std::vector<int>& subset) {
  std::uint64_t m = 0;
  for (int i : subset) m |= std::uint64_t{1} << (i - 1);
  return m;
}

Combinations::Combinations(int n, int k) : n_(n), k_(k), idx_(k > 0 ? k : 0), done_(k > n || k < 0) {
  for (int i = 0; i < k_; ++i) idx_[i] = i;
}

void Combinations::next() {
  int i = k_ - 1;
  while (i >= 0 && idx_[i] == n_ - k_ + i) --i;
  if (i < 0) {
    done_ = true;
    return;
  }
  ++idx_[i];
  for (int j = i + 1; j < k_; ++j) idx_[j] = idx_[j - 1] + 1;
}

}  // namespace boolift
