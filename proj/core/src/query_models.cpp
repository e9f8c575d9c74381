#include "boolift/query_models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <unordered_set>

#include "boolift/combinatorics.hpp"
#include "boolift/error.hpp"
#include "boolift/transforms.hpp"

namespace boolift {

namespace {

void require_total(const BooleanFunction& f, const char* op) {
  if (!f.is_total()) throw PreconditionError(std::string(op) + " requires a total function");
}

/// Exact search for the lexicographically least k-subset of candidates whose
/// separation sets jointly cover every conflict pair.
class CoverSearch {
 public:
  CoverSearch(std::vector<BitVector> sep, std::size_t universe, std::uint64_t node_cap)
      : sep_(std::move(sep)), universe_(universe), node_cap_(node_cap) {
    suffix_.assign(sep_.size() + 1, BitVector(universe_));
    for (std::size_t i = sep_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] | sep_[i];
  }

  std::optional<std::vector<std::size_t>> find(int k) {
    chosen_.clear();
    if (dfs(0, k, BitVector(universe_))) return chosen_;
    return std::nullopt;
  }

  bool coverable() const { return suffix_[0].all(); }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool dfs(std::size_t from, int left, const BitVector& covered) {
    if (++nodes_ > node_cap_) throw CapExceeded("query search exceeds search cap");
    if (covered.all()) return true;
    if (left == 0) return false;
    for (std::size_t i = from; i + static_cast<std::size_t>(left) <= sep_.size(); ++i) {
      if (!(covered | suffix_[i]).all()) return false;
      chosen_.push_back(i);
      if (dfs(i + 1, left - 1, covered | sep_[i])) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<BitVector> sep_;
  std::vector<BitVector> suffix_;
  std::size_t universe_;
  std::uint64_t node_cap_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> chosen_;
};

std::vector<std::pair<std::uint64_t, std::uint64_t>> conflict_pairs(const BooleanFunction& f) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t x = 0; x < f.input_count(); ++x)
    for (std::uint64_t y = x + 1; y < f.input_count(); ++y)
      if (f(x) != f(y)) out.emplace_back(x, y);
  return out;
}

template <class Separates>
QueryResult exact_query_search(const BooleanFunction& f, std::vector<std::uint64_t> candidates,
                               int start_k, Separates separates, const Limits& limits) {
  const auto pairs = conflict_pairs(f);
  QueryResult r;
  r.basis.arity = f.arity();
  r.candidates = candidates.size();
  if (pairs.empty()) return r;
  std::vector<BitVector> sep;
  sep.reserve(candidates.size());
  for (auto s : candidates) {
    BitVector b(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (separates(s, pairs[p].first, pairs[p].second)) b.set(p);
    sep.push_back(std::move(b));
  }
  CoverSearch search(std::move(sep), pairs.size(), limits.max_search);
  if (!search.coverable()) throw PreconditionError("candidate pool cannot determine f");
  for (int k = std::max(start_k, 1); k <= static_cast<int>(candidates.size()); ++k) {
    if (auto hit = search.find(k)) {
      r.k = k;
      for (auto i : *hit) r.basis.sets.push_back(candidates[i]);
      r.nodes = search.nodes();
      return r;
    }
  }
  throw PreconditionError("query search exhausted without a basis");
}

void check_query_arity(const BooleanFunction& f, const Limits& limits, const char* op) {
  require_total(f, op);
  if (f.arity() > limits.max_exact_query_arity)
    throw CapExceeded(std::string(op) + " arity " + std::to_string(f.arity()) + " exceeds cap " +
                      std::to_string(limits.max_exact_query_arity));
}

std::vector<std::uint64_t> all_nonempty_masks(int n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) out.push_back(m);
  return out;
}

bool and_separates(std::uint64_t s, std::uint64_t x, std::uint64_t y) {
  return is_submask(s, x) != is_submask(s, y);
}

bool parity_separates(std::uint64_t s, std::uint64_t x, std::uint64_t y) {
  return (std::popcount(s & (x ^ y)) & 1) != 0;
}

template <class Separates>
bool family_determines(const BooleanFunction& f, const SetFamily& family, Separates separates) {
  require_total(f, "family determination");
  for (auto [x, y] : conflict_pairs(f)) {
    bool hit = false;
    for (auto s : family.sets) {
      if (separates(s, x, y)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

DtResult nonadaptive_dt(const BooleanFunction& f, const Limits& limits) {
  const int n = f.arity();
  if (n > limits.max_dt_arity)
    throw CapExceeded("nonadaptive_dt arity " + std::to_string(n) + " exceeds cap " +
                      std::to_string(limits.max_dt_arity));
  if (f.is_total()) {
    const auto dep = depends_on_all(f);
    DtResult r;
    for (int i = 0; i < n; ++i)
      if (dep.witness[static_cast<std::size_t>(i)]) r.variables |= std::uint64_t{1} << i;
    r.k = std::popcount(r.variables);
    return r;
  }
  std::uint64_t work = 0;
  for (int k = 0; k <= n; ++k) {
    for (Combinations c(n, k); !c.done(); c.next()) {
      work += f.input_count();
      if (work > limits.max_search) throw CapExceeded("nonadaptive_dt exceeds search cap");
      std::uint64_t mask = 0;
      for (int i : c.current()) mask |= std::uint64_t{1} << i;
      if (is_determined_by(f, mask)) return {k, mask};
    }
  }
  return {n, f.input_count() - 1};
}

QueryResult naadt_exact(const BooleanFunction& f, const QueryOptions& options, const Limits& limits) {
  check_query_arity(f, limits, "naadt_exact");
  const auto spectrum = mobius_spectrum(f);
  std::vector<std::uint64_t> candidates;
  if (options.unrestricted) {
    candidates = all_nonempty_masks(f.arity());
  } else {
    std::vector<bool> seen(f.input_count(), false);
    for (const auto& [s, c] : spectrum.coeffs)
      for (std::uint64_t sub = s; sub; sub = (sub - 1) & s) seen[sub] = true;
    for (std::uint64_t m = 1; m < f.input_count(); ++m)
      if (seen[m]) candidates.push_back(m);
  }
  const int start = options.start_at_lower_bound ? ceil_log2(spectrum.sparsity()) : 0;
  return exact_query_search(f, std::move(candidates), start, and_separates, limits);
}

QueryResult napdt_exact(const BooleanFunction& f, const QueryOptions&, const Limits& limits) {
  check_query_arity(f, limits, "napdt_exact");
  return exact_query_search(f, all_nonempty_masks(f.arity()), 0, parity_separates, limits);
}

bool and_family_determines(const BooleanFunction& f, const SetFamily& family) {
  return family_determines(f, family, and_separates);
}

bool parity_family_determines(const BooleanFunction& f, const SetFamily& family) {
  return family_determines(f, family, parity_separates);
}

int alternating_number(const BooleanFunction& f, const Limits& limits) {
  require_total(f, "alternating_number");
  if (f.arity() > limits.max_pattern_arity)
    throw CapExceeded("alternating_number arity exceeds cap");
  const std::uint64_t size = f.input_count();
  std::vector<std::uint8_t> best(size, 0);
  for (std::uint64_t x = 1; x < size; ++x) {
    std::uint8_t m = 0;
    for (std::uint64_t rest = x; rest; rest &= rest - 1) {
      const std::uint64_t y = x & ~(rest & (~rest + 1));
      const std::uint8_t v = static_cast<std::uint8_t>(best[y] + (f(y) != f(x) ? 1 : 0));
      m = std::max(m, v);
    }
    best[x] = m;
  }
  return best[size - 1];
}

std::uint64_t default_separating_size(int n, int k) {
  const double l = std::log2(static_cast<double>(binomial(n, k)));
  return static_cast<std::uint64_t>(std::ceil(24.0 * std::numbers::e * l * l));
}

SeparatingFamilyResult separating_family(int n, int k, std::optional<std::uint64_t> target_w,
                                         std::uint64_t seed, const Limits& limits) {
  if (n < 1 || n > 63) throw PreconditionError("separating_family needs 1 <= n <= 63");
  if (k < 1 || 2 * k >= n) throw PreconditionError("separating_family needs 1 <= k < n/2");
  SeparatingFamilyResult r;
  r.target_w = target_w.value_or(default_separating_size(n, k));
  if (r.target_w == 0) throw PreconditionError("family size must be positive");
  if (r.target_w * static_cast<std::uint64_t>(n) > limits.max_search)
    throw CapExceeded("separating family size exceeds search cap");
  const std::uint64_t threshold = ~std::uint64_t{0} / (2 * static_cast<std::uint64_t>(k));
  for (int attempt = 0; attempt < limits.separating_attempts; ++attempt) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(attempt));
    std::vector<std::uint64_t> sets;
    sets.reserve(r.target_w);
    for (std::uint64_t s = 0; s < r.target_w; ++s) {
      std::uint64_t m = 0;
      for (int i = 0; i < n; ++i)
        if (rng() < threshold) m |= std::uint64_t{1} << i;
      sets.push_back(m);
    }
    SetFamily fam;
    fam.arity = n;
    std::unordered_set<std::uint64_t> seen;
    for (auto m : sets)
      if (m && seen.insert(m).second) fam.sets.push_back(m);
    r.attempts = attempt + 1;
    if (separating_check(fam, n, k, limits).ok) {
      r.family = std::move(fam);
      return r;
    }
  }
  throw CapExceeded("separating_family: no passing family within " +
                    std::to_string(limits.separating_attempts) + " attempts");
}

SeparatingCheck separating_check(const SetFamily& family, int n, int k, const Limits& limits) {
  if (k < 0 || k + 1 > n) throw PreconditionError("separating_check needs 0 <= k < n");
  const std::uint64_t tuples = binomial(n, k + 1);
  const std::uint64_t words = (family.size() + 63) / 64;
  if (tuples > limits.max_search / std::max<std::uint64_t>(1, words * static_cast<std::uint64_t>(k + 1)))
    throw CapExceeded("separating_check work exceeds search cap");
  std::vector<BitVector> mem(static_cast<std::size_t>(n), BitVector(family.size()));
  for (std::size_t s = 0; s < family.size(); ++s)
    for (int i = 0; i < n; ++i)
      if ((family.sets[s] >> i) & 1u) mem[static_cast<std::size_t>(i)].set(s);
  SeparatingCheck r;
  const std::size_t t = static_cast<std::size_t>(k + 1);
  std::vector<BitVector> prefix(t + 1, BitVector(family.size()));
  std::vector<BitVector> suffix(t + 1, BitVector(family.size()));
  for (Combinations c(n, k + 1); !c.done(); c.next()) {
    const auto& idx = c.current();
    for (std::size_t j = 0; j < t; ++j) prefix[j + 1] = prefix[j] | mem[static_cast<std::size_t>(idx[j])];
    for (std::size_t j = t; j-- > 0;) suffix[j] = suffix[j + 1] | mem[static_cast<std::size_t>(idx[j])];
    for (std::size_t j = 0; j < t; ++j) {
      const BitVector others = prefix[j] | suffix[j + 1];
      const BitVector& own = mem[static_cast<std::size_t>(idx[j])];
      if (!own.is_subset_of(others)) continue;
      r.ok = false;
      for (int i : idx) r.tuple.push_back(i + 1);
      r.designated = idx[j] + 1;
      return r;
    }
  }
  return r;
}

BitVector SymmetricNaadtPlan::pattern(std::uint64_t x) const {
  // X is inside x iff X avoids every element outside x.
  BitVector outside(family.size());
  for (int i = 0; i < arity; ++i)
    if (!((x >> i) & 1u)) outside |= members[static_cast<std::size_t>(i)];
  return ~outside;
}

SymmetricNaadtPlan symmetric_naadt(const BooleanFunction& f, std::uint64_t seed, const Limits& limits) {
  require_total(f, "symmetric_naadt");
  const int n = f.arity();
  const int k = switch_value(f);
  if (2 * k >= n)
    throw NoSmallPlan("switch " + std::to_string(k) + " >= n/2; no small plan, fall back to querying all " +
                      std::to_string(n) + " variables");
  SymmetricNaadtPlan plan;
  plan.arity = n;
  plan.k = k;
  if (k == 0) {
    plan.family.arity = n;
    plan.family.sets = {f.input_count() - 1};
    plan.attempts = 0;
  } else {
    auto sf = separating_family(n, k, std::nullopt, seed, limits);
    plan.family = std::move(sf.family);
    plan.attempts = sf.attempts;
  }
  plan.members.assign(static_cast<std::size_t>(n), BitVector(plan.family.size()));
  for (std::size_t s = 0; s < plan.family.size(); ++s)
    for (int i = 0; i < n; ++i)
      if ((plan.family.sets[s] >> i) & 1u) plan.members[static_cast<std::size_t>(i)].set(s);
  plan.default_value = f(0);
  for (std::uint64_t y = 0; y < f.input_count(); ++y) {
    if (std::popcount(y) < n - k) continue;
    auto [it, inserted] = plan.reference.emplace(plan.pattern(y), f(y));
    if (!inserted) throw Error("symmetric_naadt: two reference inputs share a pattern");
  }
  return plan;
}

bool symmetric_naadt_eval(const SymmetricNaadtPlan& plan, std::uint64_t x) {
  auto it = plan.reference.find(plan.pattern(x));
  return it != plan.reference.end() ? it->second : plan.default_value;
}

}  // namespace boolift
