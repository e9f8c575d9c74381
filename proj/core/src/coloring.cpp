#include "boolift/coloring.hpp"

#include <algorithm>
#include <optional>

#include "boolift/error.hpp"

namespace boolift {

namespace {

struct CliqueSearch {
  const Graph& g;
  std::uint64_t cap;
  std::uint64_t nodes = 0;
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;

  void run(const BitVector& cand) {
    if (++nodes > cap) throw CapExceeded("clique search exceeds node cap");
    if (current.size() > best.size()) best = current;
    if (current.size() + cand.count() <= best.size()) return;
    BitVector rest = cand;
    for (std::size_t v = rest.find_first(); v < rest.size(); v = rest.find_next(v + 1)) {
      if (current.size() + rest.count() <= best.size()) return;
      current.push_back(v);
      run(rest & g.neighbours(v));
      current.pop_back();
      rest.reset(v);
    }
  }
};

std::size_t greedy_clique(const Graph& g) {
  std::size_t best = g.size() ? 1 : 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    BitVector cand = g.neighbours(s);
    std::size_t size = 1;
    while (cand.any()) {
      std::size_t pick = cand.size(), pick_deg = 0;
      for (std::size_t v = cand.find_first(); v < cand.size(); v = cand.find_next(v + 1)) {
        const std::size_t d = (cand & g.neighbours(v)).count();
        if (pick == cand.size() || d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      cand &= g.neighbours(pick);
      ++size;
    }
    best = std::max(best, size);
  }
  return best;
}

class Dsatur {
 public:
  Dsatur(const Graph& g, std::uint64_t cap)
      : g_(g), n_(g.size()), cap_(cap), color_(n_, -1), cnt_(n_ * (n_ + 1), 0), sat_(n_, 0), deg_(n_) {
    for (std::size_t v = 0; v < n_; ++v) deg_[v] = g.degree(v);
  }

  Coloring solve(std::size_t lower) {
    // Greedy DSATUR pass for the initial upper bound.
    best_ = n_ + 1;
    greedy_ = true;
    search(0, 0);
    greedy_ = false;
    lower_ = lower;
    if (best_ > lower_) search(0, 0);
    Coloring out;
    out.colors = best_;
    out.color = best_color_;
    out.nodes = nodes_;
    return out;
  }

 private:
  std::optional<std::size_t> pick() const {
    std::optional<std::size_t> best;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      if (!best || sat_[v] > sat_[*best] || (sat_[v] == sat_[*best] && deg_[v] > deg_[*best])) best = v;
    }
    return best;
  }

  void assign(std::size_t v, int c) {
    color_[v] = c;
    const BitVector& nb = g_.neighbours(v);
    for (std::size_t u = nb.find_first(); u < n_; u = nb.find_next(u + 1))
      if (cnt_[u * (n_ + 1) + static_cast<std::size_t>(c)]++ == 0) ++sat_[u];
  }

  void unassign(std::size_t v) {
    const int c = color_[v];
    color_[v] = -1;
    const BitVector& nb = g_.neighbours(v);
    for (std::size_t u = nb.find_first(); u < n_; u = nb.find_next(u + 1))
      if (--cnt_[u * (n_ + 1) + static_cast<std::size_t>(c)] == 0) --sat_[u];
  }

  // Returns true when the search can stop (optimum proven).
  bool search(std::size_t colored, std::size_t used) {
    if (++nodes_ > cap_) throw CapExceeded("colouring search exceeds node cap");
    if (used >= best_) return false;
    if (colored == n_) {
      best_ = used;
      best_color_ = color_;
      return greedy_ || best_ <= lower_;
    }
    const std::size_t v = *pick();
    for (std::size_t c = 0; c <= used; ++c) {
      if (c == used && used + 1 >= best_) break;
      if (cnt_[v * (n_ + 1) + c]) continue;
      assign(v, static_cast<int>(c));
      const bool stop = search(colored + 1, std::max(used, c + 1));
      unassign(v);
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::uint64_t cap_;
  std::vector<int> color_;
  std::vector<int> cnt_;
  std::vector<std::size_t> sat_;
  std::vector<std::size_t> deg_;
  std::size_t best_ = 0;
  std::size_t lower_ = 0;
  bool greedy_ = false;
  std::vector<int> best_color_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::vector<std::size_t> max_clique_lex(const Graph& g, std::uint64_t node_cap) {
  CliqueSearch s{g, node_cap, 0, {}, {}};
  s.run(BitVector(g.size(), true));
  return s.best;
}

Coloring chromatic_number(const Graph& g, std::uint64_t node_cap) {
  if (g.size() == 0) return {};
  std::size_t lower;
  try {
    lower = max_clique_lex(g, std::min<std::uint64_t>(node_cap, 1u << 20)).size();
  } catch (const CapExceeded&) {
    lower = greedy_clique(g);
  }
  return Dsatur(g, node_cap).solve(lower);
}

}  // namespace boolift
