#pragma once

// Slow, direct reimplementations used to cross-check the library.

#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "boolift/boolean_function.hpp"

namespace oracle {

using boolift::BooleanFunction;
using Rational = boost::multiprecision::cpp_rational;

inline BooleanFunction random_function(int n, std::mt19937_64& rng) {
  return BooleanFunction::from_predicate(n, [&](std::uint64_t) { return (rng() >> 17) & 1u; });
}

inline BooleanFunction from_index(int n, std::uint64_t idx) {
  return BooleanFunction::from_predicate(n, [&](std::uint64_t x) { return (idx >> x) & 1u; });
}

/// f~(S) = sum_{T subset S} (-1)^{|S|-|T|} f(T).
inline std::map<std::uint64_t, std::int64_t> mobius(const BooleanFunction& f) {
  std::map<std::uint64_t, std::int64_t> out;
  for (std::uint64_t s = 0; s < f.input_count(); ++s) {
    std::int64_t c = 0;
    for (std::uint64_t t = 0; t < f.input_count(); ++t)
      if ((t & ~s) == 0 && f(t)) c += (std::popcount(s ^ t) & 1) ? -1 : 1;
    if (c) out[s] = c;
  }
  return out;
}

/// 2^n f^(S) = sum_x g(x) (-1)^{|x & S|} with g = f or g = 1 - 2f.
inline std::map<std::uint64_t, std::int64_t> fourier(const BooleanFunction& f, bool plus_minus) {
  std::map<std::uint64_t, std::int64_t> out;
  for (std::uint64_t s = 0; s < f.input_count(); ++s) {
    std::int64_t c = 0;
    for (std::uint64_t x = 0; x < f.input_count(); ++x) {
      const std::int64_t v = plus_minus ? (f(x) ? -1 : 1) : (f(x) ? 1 : 0);
      c += (std::popcount(x & s) & 1) ? -v : v;
    }
    if (c) out[s] = c;
  }
  return out;
}

/// Distinct vectors (AND_S(x))_{S in support}.
inline std::size_t pattern_count(const BooleanFunction& f) {
  std::vector<std::uint64_t> support;
  for (const auto& [s, c] : mobius(f)) support.push_back(s);
  std::set<std::vector<bool>> seen;
  for (std::uint64_t x = 0; x < f.input_count(); ++x) {
    std::vector<bool> p;
    for (auto s : support) p.push_back((s & ~x) == 0);
    seen.insert(p);
  }
  return seen.size();
}

/// Rank over Q by Gaussian elimination with exact rationals.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational factor = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Dense matrix of f o g where g(a, b) is given as a table over (a, b).
template <class Gadget>
std::vector<std::vector<int>> composed_matrix(const BooleanFunction& f, int alice_bits, int bob_bits, Gadget g) {
  const int n = f.arity();
  const std::uint64_t rows = std::uint64_t{1} << (n * alice_bits);
  const std::uint64_t cols = std::uint64_t{1} << (n * bob_bits);
  std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
  for (std::uint64_t x = 0; x < rows; ++x)
    for (std::uint64_t y = 0; y < cols; ++y) {
      std::uint64_t z = 0;
      for (int i = 0; i < n; ++i) {
        const std::uint64_t a = (x >> (i * alice_bits)) & ((std::uint64_t{1} << alice_bits) - 1);
        const std::uint64_t b = (y >> (i * bob_bits)) & ((std::uint64_t{1} << bob_bits) - 1);
        if (g(a, b)) z |= std::uint64_t{1} << i;
      }
      m[x][y] = f(z);
    }
  return m;
}

inline int ceil_log2(std::size_t v) {
  int k = 0;
  while ((std::size_t{1} << k) < v) ++k;
  return k;
}

inline int distinct_rows_log(const std::vector<std::vector<int>>& m) {
  return ceil_log2(std::set<std::vector<int>>(m.begin(), m.end()).size());
}

/// Smallest k such that some k nonempty masks separate every differing pair.
/// `parity` chooses XOR queries instead of AND queries.
inline int query_complexity(const BooleanFunction& f, bool parity) {
  const std::uint64_t N = f.input_count();
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 1; m < N; ++m) masks.push_back(m);
  auto answer = [&](std::uint64_t s, std::uint64_t x) {
    return parity ? (std::popcount(s & x) & 1) == 1 : (s & ~x) == 0;
  };
  for (int k = 0; k <= static_cast<int>(masks.size()); ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      std::map<std::vector<bool>, int> value;
      bool ok = true;
      for (std::uint64_t x = 0; x < N && ok; ++x) {
        std::vector<bool> key;
        for (int i : idx) key.push_back(answer(masks[static_cast<std::size_t>(i)], x));
        auto [it, inserted] = value.emplace(key, f(x));
        ok = inserted || it->second == f(x);
      }
      if (ok) return k;
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(masks.size()) - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
    }
  }
  return -1;
}

/// Chromatic number by trying k = 1, 2, ... with plain backtracking.
inline std::size_t chromatic(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return 0;
  std::vector<int> color(n, -1);
  for (std::size_t k = 1;; ++k) {
    std::function<bool(std::size_t)> place = [&](std::size_t v) {
      if (v == n) return true;
      for (int c = 0; c < static_cast<int>(k); ++c) {
        bool free = true;
        for (std::size_t u = 0; u < v && free; ++u) free = !(adj[v][u] && color[u] == c);
        if (!free) continue;
        color[v] = c;
        if (place(v + 1)) return true;
      }
      color[v] = -1;
      return false;
    };
    if (place(0)) return k;
  }
}

}  // namespace oracle
