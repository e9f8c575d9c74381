#pragma once

#include <cstdint>
#include <vector>

#include "boolift/bitvector.hpp"

namespace boolift {

/// Undirected simple graph as adjacency bit rows.
class Graph {
 public:
  explicit Graph(std::size_t n) : adj_(n, BitVector(n)) {}

  std::size_t size() const { return adj_.size(); }
  void add_edge(std::size_t u, std::size_t v) {
    adj_[u].set(v);
    adj_[v].set(u);
  }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const BitVector& neighbours(std::size_t u) const { return adj_[u]; }
  std::size_t degree(std::size_t u) const { return adj_[u].count(); }

 private:
  std::vector<BitVector> adj_;
};

struct Coloring {
  std::size_t colors = 0;
  std::vector<int> color;  // per vertex, 0-based
  std::uint64_t nodes = 0;
};

/// Exact chromatic number by DSATUR branch and bound, seeded with a greedy
/// clique lower bound. Throws CapExceeded after node_cap search nodes.
Coloring chromatic_number(const Graph& g, std::uint64_t node_cap);

/// Lexicographically least clique of maximum size (vertices increasing).
std::vector<std::size_t> max_clique_lex(const Graph& g, std::uint64_t node_cap);

}  // namespace boolift
