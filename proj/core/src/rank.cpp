#include "boolift/rank.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "boolift/error.hpp"

namespace boolift {

namespace {

std::vector<BitVector> distinct(const std::vector<BitVector>& v) {
  std::unordered_set<BitVector, BitVectorHash> seen;
  std::vector<BitVector> out;
  for (const auto& r : v) {
    if (r.none()) continue;
    if (seen.insert(r).second) out.push_back(r);
  }
  return out;
}

std::vector<BitVector> transpose(const std::vector<BitVector>& rows, std::size_t cols) {
  std::vector<BitVector> out(cols, BitVector(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = rows[i].find_first(); j < cols; j = rows[i].find_next(j + 1)) out[j].set(i);
  return out;
}

/// Distinct nonzero rows and columns; rank is unchanged by both.
std::vector<BitVector> reduce(const std::vector<BitVector>& rows, const Limits& limits) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw PreconditionError("rank: rows differ in length");
  auto r = distinct(rows);
  if (r.empty()) return {};
  auto c = distinct(transpose(r, cols));
  if (std::min(r.size(), c.size()) > limits.max_rank_dim)
    throw CapExceeded("rank: dimension " + std::to_string(std::min(r.size(), c.size())) +
                      " exceeds cap " + std::to_string(limits.max_rank_dim));
  if (r.size() * c.size() > limits.max_cells) throw CapExceeded("rank: matrix exceeds cell cap");
  // Orient so that rows are the shorter side.
  if (c.size() < r.size()) return c;
  return transpose(c, r.size());
}

bool is_prime(std::uint32_t v) {
  if (v < 2) return false;
  for (std::uint32_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    const std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p : t);
}

/// log2 of the largest possible |det| of an m x m 0/1 matrix.
double log2_hadamard_01(std::size_t m) {
  const double r = static_cast<double>(m);
  return (r + 1) / 2 * std::log2(r + 1) - r;
}

}  // namespace

std::size_t rank_mod_prime(std::vector<double> a, std::size_t rows, std::size_t cols, std::uint32_t p) {
  const double pd = p;
  const double pinv = 1.0 / pd;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + col] == 0.0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(piv * cols),
                       a.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols),
                       a.begin() + static_cast<std::ptrdiff_t>(rank * cols));
    double* prow = a.data() + rank * cols;
    const std::uint32_t inv = inverse_mod(static_cast<std::uint32_t>(prow[col]), p);
    for (std::size_t j = col; j < cols; ++j)
      prow[j] = static_cast<double>(static_cast<std::uint64_t>(prow[j]) * inv % p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      double* row = a.data() + r * cols;
      const double m = row[col];
      if (m == 0.0) continue;
      const double neg = pd - m;
      for (std::size_t j = col; j < cols; ++j) {
        const double v = std::fma(neg, prow[j], row[j]);
        const double q = std::floor(v * pinv);
        double t = std::fma(-q, pd, v);
        t = t < 0 ? t + pd : t;
        t = t >= pd ? t - pd : t;
        row[j] = t;
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t matrix_rank(const std::vector<BitVector>& input, const Limits& limits) {
  const auto rows = reduce(input, limits);
  if (rows.empty()) return 0;
  const std::size_t m = rows.size(), n = rows.front().size();
  const std::size_t full = std::min(m, n);
  std::vector<double> dense(m * n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = rows[i].find_first(); j < n; j = rows[i].find_next(j + 1)) dense[i * n + j] = 1.0;

  const double need = log2_hadamard_01(full) + 1;
  double have = 0;
  std::size_t best = 0;
  for (std::uint32_t p = (1u << 26) - 1; p > (1u << 25); p -= 2) {
    if (!is_prime(p)) continue;
    best = std::max(best, rank_mod_prime(dense, m, n, p));
    if (best == full) break;
    have += std::log2(static_cast<double>(p));
    if (have > need) break;
  }
  return best;
}

std::size_t rank_bareiss(const std::vector<BitVector>& input, const Limits& limits) {
  using boost::multiprecision::cpp_int;
  const auto rows = reduce(input, limits);
  if (rows.empty()) return 0;
  const std::size_t m = rows.size(), n = rows.front().size();
  std::vector<std::vector<cpp_int>> a(m, std::vector<cpp_int>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i].test(j) ? 1 : 0;
  cpp_int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < m; ++r) {
      for (std::size_t j = col + 1; j < n; ++j)
        a[r][j] = (a[rank][col] * a[r][j] - a[r][col] * a[rank][j]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace boolift
