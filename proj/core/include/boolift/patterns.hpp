#pragma once

#include <cstdint>
#include <vector>

#include "boolift/bitvector.hpp"
#include "boolift/boolean_function.hpp"
#include "boolift/limits.hpp"

namespace boolift {

/// Bits indexed by the canonical (increasing-mask) Möbius support order.
using Pattern = BitVector;

/// Bit k is 1 iff support[k] is a submask of x.
Pattern pattern_of(const std::vector<std::uint64_t>& support, std::uint64_t x);
Pattern pattern_of(const BooleanFunction& f, std::uint64_t x);

struct PatternSet {
  std::vector<std::uint64_t> support;
  std::vector<Pattern> patterns;  // distinct patterns, sorted
  std::size_t count() const { return patterns.size(); }
};

/// Distinct patterns over all 2^n inputs.
PatternSet pattern_set(const BooleanFunction& f, const Limits& limits = {});
std::size_t pattern_complexity(const BooleanFunction& f, const Limits& limits = {});

struct PartnerSet {
  std::uint64_t s = 0;
  std::uint64_t t = 0;
  std::vector<std::uint64_t> partners;  // one or two support masks, increasing
};

/// Partners of {s, t} in a sorted support: {s | t} when it is in the support,
/// otherwise the lexicographically least pair {u, v} != {s, t} of support
/// sets with u | v = s | t.
PartnerSet partner(const std::vector<std::uint64_t>& support, std::uint64_t s, std::uint64_t t);
PartnerSet partner(const BooleanFunction& f, std::uint64_t s, std::uint64_t t);

struct GrowthStep {
  int iteration = 0;
  std::vector<std::uint64_t> chosen;     // {S, T}; empty for step 0 and the closing step
  std::vector<std::uint64_t> partners;
  std::vector<std::uint64_t> tracked;    // T_i in support order
  std::size_t partial_pattern_count = 0; // |P_i|
  std::size_t max_extensions = 0;        // max over P in P_{i-1} of its extensions in P_i
  bool bound_ok = true;                  // |P_i|^3 <= 6^{|T_i|} (not asserted on the closing step)
  bool extension_ok = true;              // max_extensions^3 <= 6^{|T_i| - |T_{i-1}|}
};

struct GrowthTrace {
  std::size_t sparsity = 0;
  std::size_t pattern_complexity = 0;
  int iterations = 0;                    // num_iterations of the loop
  std::vector<GrowthStep> steps;         // steps[0] = T_0, ..., last = full support
  bool final_ok = true;                  // Pat^3 <= 8 * 6^{spar}
  bool all_ok() const;
};

/// Runs the iteration that grows T by a pair of untracked support sets and
/// their partners while |T| <= spar - 2, picking the two least untracked sets.
GrowthTrace pattern_growth_trace(const BooleanFunction& f, const Limits& limits = {});

/// a^3 <= mult * 6^t, exact.
bool cube_within_pow6(std::uint64_t a, std::size_t t, unsigned mult = 1);

}  // namespace boolift
