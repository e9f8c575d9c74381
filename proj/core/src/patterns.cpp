#include "boolift/patterns.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "boolift/combinatorics.hpp"
#include "boolift/error.hpp"
#include "boolift/transforms.hpp"

namespace boolift {

namespace {

void require_total(const BooleanFunction& f, const char* op) {
  if (!f.is_total()) throw PreconditionError(std::string(op) + " requires a total function");
}

void check_caps(const BooleanFunction& f, std::size_t spar, const Limits& limits) {
  if (f.arity() > limits.max_pattern_arity)
    throw CapExceeded("pattern enumeration arity " + std::to_string(f.arity()) + " exceeds cap " +
                      std::to_string(limits.max_pattern_arity));
  const std::uint64_t work = static_cast<std::uint64_t>(std::max<std::size_t>(spar, 1)) * f.input_count();
  if (work > limits.max_search) throw CapExceeded("pattern enumeration work exceeds search cap");
}

bool contains(const std::vector<std::uint64_t>& sorted, std::uint64_t m) {
  return std::binary_search(sorted.begin(), sorted.end(), m);
}

}  // namespace

Pattern pattern_of(const std::vector<std::uint64_t>& support, std::uint64_t x) {
  Pattern p(support.size());
  for (std::size_t k = 0; k < support.size(); ++k)
    if (is_submask(support[k], x)) p.set(k);
  return p;
}

Pattern pattern_of(const BooleanFunction& f, std::uint64_t x) {
  require_total(f, "pattern_of");
  return pattern_of(mobius_support(f), x);
}

PatternSet pattern_set(const BooleanFunction& f, const Limits& limits) {
  require_total(f, "pattern_complexity");
  PatternSet out;
  out.support = mobius_support(f);
  check_caps(f, out.support.size(), limits);
  const auto& sup = out.support;
  if (sup.size() <= 64) {
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t x = 0; x < f.input_count(); ++x) {
      std::uint64_t p = 0;
      for (std::size_t k = 0; k < sup.size(); ++k)
        if (is_submask(sup[k], x)) p |= std::uint64_t{1} << k;
      seen.insert(p);
    }
    out.patterns.reserve(seen.size());
    for (std::uint64_t p : seen) {
      Pattern bv(sup.size());
      if (!sup.empty()) bv.words()[0] = p;
      out.patterns.push_back(std::move(bv));
    }
  } else {
    std::unordered_set<Pattern, BitVectorHash> seen;
    for (std::uint64_t x = 0; x < f.input_count(); ++x) seen.insert(pattern_of(sup, x));
    out.patterns.assign(seen.begin(), seen.end());
  }
  std::sort(out.patterns.begin(), out.patterns.end());
  return out;
}

std::size_t pattern_complexity(const BooleanFunction& f, const Limits& limits) {
  return pattern_set(f, limits).count();
}

PartnerSet partner(const std::vector<std::uint64_t>& support, std::uint64_t s, std::uint64_t t) {
  if (s == t) throw PreconditionError("partner needs two distinct sets");
  if (!contains(support, s) || !contains(support, t))
    throw PreconditionError("partner sets must lie in the Möbius support");
  PartnerSet r;
  r.s = std::min(s, t);
  r.t = std::max(s, t);
  const std::uint64_t w = s | t;
  if (contains(support, w)) {
    r.partners = {w};
    return r;
  }
  std::vector<std::uint64_t> subs;
  for (auto m : support)
    if (is_submask(m, w)) subs.push_back(m);
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      if ((subs[i] | subs[j]) != w) continue;
      if (subs[i] == r.s && subs[j] == r.t) continue;
      r.partners = {subs[i], subs[j]};
      return r;
    }
  throw PreconditionError("no partner pair exists; the support is not that of a 0/1 function");
}

PartnerSet partner(const BooleanFunction& f, std::uint64_t s, std::uint64_t t) {
  require_total(f, "partner");
  return partner(mobius_support(f), s, t);
}

bool cube_within_pow6(std::uint64_t a, std::size_t t, unsigned mult) {
  using u128 = unsigned __int128;
  const u128 cap = u128{1} << 126;
  u128 rhs = mult;
  for (std::size_t i = 0; i < t && rhs < cap; ++i) rhs *= 6;
  if (a >= (std::uint64_t{1} << 42)) throw CapExceeded("count too large for exact comparison");
  const u128 lhs = u128{a} * a * a;
  return lhs <= rhs;
}

bool GrowthTrace::all_ok() const {
  if (!final_ok) return false;
  for (const auto& s : steps)
    if (!s.bound_ok || !s.extension_ok) return false;
  return true;
}

GrowthTrace pattern_growth_trace(const BooleanFunction& f, const Limits& limits) {
  require_total(f, "pattern_growth_trace");
  const PatternSet ps = pattern_set(f, limits);
  const auto& sup = ps.support;
  const std::size_t spar = sup.size();
  if (spar < 2) throw PreconditionError("pattern_growth_trace needs spar(f) >= 2");

  GrowthTrace trace;
  trace.sparsity = spar;
  trace.pattern_complexity = ps.count();

  BitVector tracked(spar);

  auto tracked_list = [&] {
    std::vector<std::uint64_t> out;
    for (std::size_t k = tracked.find_first(); k < spar; k = tracked.find_next(k + 1)) out.push_back(sup[k]);
    return out;
  };
  auto index_of = [&](std::uint64_t m) {
    return static_cast<std::size_t>(std::lower_bound(sup.begin(), sup.end(), m) - sup.begin());
  };

  auto record = [&](GrowthStep step, std::size_t prev_size, bool closing) {
    std::unordered_set<Pattern, BitVectorHash> partial;
    for (const auto& p : ps.patterns) partial.insert(p & tracked);
    std::unordered_map<Pattern, std::size_t, BitVectorHash> ext;
    BitVector prev_mask(spar);
    for (const auto& m : trace.steps.empty() ? std::vector<std::uint64_t>{} : trace.steps.back().tracked)
      prev_mask.set(index_of(m));
    for (const auto& q : partial) ++ext[q & prev_mask];
    step.tracked = tracked_list();
    step.partial_pattern_count = partial.size();
    for (const auto& [p, c] : ext) step.max_extensions = std::max(step.max_extensions, c);
    const std::size_t added = tracked.count() - prev_size;
    step.extension_ok = closing || cube_within_pow6(step.max_extensions, added);
    step.bound_ok = closing || cube_within_pow6(step.partial_pattern_count, tracked.count());
    trace.steps.push_back(std::move(step));
  };

  {
    GrowthStep s0;
    s0.iteration = 0;
    s0.partial_pattern_count = 1;
    s0.max_extensions = 1;
    trace.steps.push_back(std::move(s0));
  }

  int i = 0;
  while (tracked.count() + 2 <= spar) {
    std::size_t a = spar, b = spar;
    for (std::size_t k = 0; k < spar; ++k) {
      if (tracked.test(k)) continue;
      if (a == spar) {
        a = k;
      } else {
        b = k;
        break;
      }
    }
    const PartnerSet p = partner(sup, sup[a], sup[b]);
    const std::size_t before = tracked.count();
    tracked.set(a);
    tracked.set(b);
    for (auto w : p.partners) tracked.set(index_of(w));
    ++i;
    GrowthStep step;
    step.iteration = i;
    step.chosen = {sup[a], sup[b]};
    step.partners = p.partners;
    record(std::move(step), before, false);
  }
  trace.iterations = i;

  const std::size_t before = tracked.count();
  tracked = BitVector(spar, true);
  GrowthStep last;
  last.iteration = i + 1;
  record(std::move(last), before, true);

  trace.final_ok = cube_within_pow6(ps.count(), spar, 8);
  return trace;
}

}  // namespace boolift
