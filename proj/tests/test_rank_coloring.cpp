#include <gtest/gtest.h>

#include <random>

#include "boolift/coloring.hpp"
#include "boolift/error.hpp"
#include "boolift/rank.hpp"
#include "oracles.hpp"

using namespace boolift;

namespace {

std::vector<BitVector> random_rows(std::size_t r, std::size_t c, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution bit(density);
  std::vector<BitVector> rows(r, BitVector(c));
  for (auto& row : rows)
    for (std::size_t j = 0; j < c; ++j)
      if (bit(rng)) row.set(j);
  return rows;
}

std::size_t oracle_rank(const std::vector<BitVector>& rows) {
  std::vector<std::vector<oracle::Rational>> a;
  for (const auto& r : rows) {
    a.emplace_back();
    for (std::size_t j = 0; j < r.size(); ++j) a.back().push_back(r.test(j) ? 1 : 0);
  }
  return oracle::rational_rank(a);
}

}  // namespace

TEST(Rank, MatchesRationalElimination) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    const std::size_t r = 1 + rng() % 14, c = 1 + rng() % 14;
    const auto rows = random_rows(r, c, t % 2 ? 0.5 : 0.2, rng);
    const auto want = oracle_rank(rows);
    EXPECT_EQ(matrix_rank(rows), want);
    EXPECT_EQ(rank_bareiss(rows), want);
  }
}

TEST(Rank, LowRankProducts) {
  // Rows that are ORs of a few disjoint generators have small rank.
  std::vector<BitVector> gens(3, BitVector(30));
  for (std::size_t j = 0; j < 30; ++j) gens[j % 3].set(j);
  std::vector<BitVector> rows;
  for (int m = 0; m < 8; ++m) {
    BitVector r(30);
    for (int g = 0; g < 3; ++g)
      if ((m >> g) & 1) r |= gens[static_cast<std::size_t>(g)];
    rows.push_back(r);
  }
  EXPECT_EQ(matrix_rank(rows), 3u);
  EXPECT_EQ(matrix_rank({}), 0u);
  EXPECT_EQ(matrix_rank({BitVector(5)}), 0u);
}

TEST(Rank, AgreesAcrossRoutesOnLargerMatrices) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 4; ++t) {
    const auto rows = random_rows(40, 40, 0.5, rng);
    EXPECT_EQ(matrix_rank(rows), rank_bareiss(rows));
  }
}

TEST(Rank, ModPrime) {
  // [[1,1],[1,1]] has rank 1; [[2,1],[1,2]] has determinant 3.
  EXPECT_EQ(rank_mod_prime({1, 1, 1, 1}, 2, 2, 7), 1u);
  EXPECT_EQ(rank_mod_prime({2, 1, 1, 2}, 2, 2, 7), 2u);
  EXPECT_EQ(rank_mod_prime({2, 1, 1, 2}, 2, 2, 3), 1u);
}

TEST(Rank, CapOnDimension) {
  Limits l;
  l.max_rank_dim = 4;
  std::vector<BitVector> rows(5, BitVector(5));
  for (std::size_t i = 0; i < 5; ++i) rows[i].set(i);
  EXPECT_THROW(matrix_rank(rows, l), CapExceeded);
}

TEST(Coloring, MatchesBacktrackingOracle) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 1 + rng() % 11;
    Graph g(n);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (rng() % 2) {
          g.add_edge(u, v);
          adj[u][v] = adj[v][u] = true;
        }
    const auto c = chromatic_number(g, 1u << 20);
    EXPECT_EQ(c.colors, oracle::chromatic(adj));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (adj[u][v]) EXPECT_NE(c.color[u], c.color[v]);
  }
}

TEST(Coloring, CyclesAndCliques) {
  Graph c5(5);
  for (std::size_t i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  EXPECT_EQ(chromatic_number(c5, 1000).colors, 3u);
  Graph k4(4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) k4.add_edge(i, j);
  EXPECT_EQ(chromatic_number(k4, 1000).colors, 4u);
  EXPECT_EQ(max_clique_lex(k4, 1000), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(max_clique_lex(c5, 1000), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(chromatic_number(Graph(0), 10).colors, 0u);
}
