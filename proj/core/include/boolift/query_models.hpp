#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "boolift/bitvector.hpp"
#include "boolift/boolean_function.hpp"
#include "boolift/limits.hpp"

namespace boolift {

/// Ordered family of subsets of [n], as masks.
struct SetFamily {
  int arity = 0;
  std::vector<std::uint64_t> sets;

  std::size_t size() const { return sets.size(); }
  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

struct DtResult {
  int k = 0;
  std::uint64_t variables = 0;  // mask of the queried variables
};

/// Fewest variables whose values fix f on its domain, with the
/// lexicographically least such set.
DtResult nonadaptive_dt(const BooleanFunction& f, const Limits& limits = {});

struct QueryOptions {
  /// Search all 2^n - 1 nonempty masks instead of submasks of support sets.
  bool unrestricted = false;
  /// Start iterative deepening at the sparsity lower bound (AND queries only).
  bool start_at_lower_bound = true;
};

struct QueryResult {
  int k = 0;
  SetFamily basis;
  std::size_t candidates = 0;  // size of the searched mask pool
  std::uint64_t nodes = 0;     // search nodes visited
};

/// Minimum number of AND queries fixed in advance that determine f.
QueryResult naadt_exact(const BooleanFunction& f, const QueryOptions& options = {},
                        const Limits& limits = {});
/// Minimum number of parity queries fixed in advance that determine f.
QueryResult napdt_exact(const BooleanFunction& f, const QueryOptions& options = {},
                        const Limits& limits = {});

/// True iff the AND (or parity) values of `family` separate every pair of
/// inputs on which f differs.
bool and_family_determines(const BooleanFunction& f, const SetFamily& family);
bool parity_family_determines(const BooleanFunction& f, const SetFamily& family);

/// Largest number of value changes along a monotone path 0^n -> 1^n.
int alternating_number(const BooleanFunction& f, const Limits& limits = {});

/// ceil(24e * (log2 C(n, k))^2).
std::uint64_t default_separating_size(int n, int k);

struct SeparatingFamilyResult {
  SetFamily family;
  int attempts = 0;
  std::uint64_t target_w = 0;
};

/// Samples target_w sets with each element included with probability
/// 1/(2k), from mt19937_64 seeded with seed + attempt index, until the
/// family passes separating_check. Empty and repeated sets are dropped.
SeparatingFamilyResult separating_family(int n, int k, std::optional<std::uint64_t> target_w,
                                         std::uint64_t seed, const Limits& limits = {});

struct SeparatingCheck {
  bool ok = true;
  std::vector<int> tuple;  // 1-based elements of the failing (k+1)-subset
  int designated = 0;      // the element that no set isolates
};

/// For every (k+1)-subset and each of its elements i, some set contains i
/// and none of the other k elements.
SeparatingCheck separating_check(const SetFamily& family, int n, int k, const Limits& limits = {});

struct SymmetricNaadtPlan {
  int arity = 0;
  int k = 0;
  SetFamily family;
  int attempts = 0;
  bool default_value = false;
  std::unordered_map<BitVector, bool, BitVectorHash> reference;
  std::vector<BitVector> members;  // members[i] = sets containing element i

  /// AND_X(x) for every X in the family.
  BitVector pattern(std::uint64_t x) const;
};

/// Throws NoSmallPlan when switch(f) >= n/2.
SymmetricNaadtPlan symmetric_naadt(const BooleanFunction& f, std::uint64_t seed = 0,
                                   const Limits& limits = {});
bool symmetric_naadt_eval(const SymmetricNaadtPlan& plan, std::uint64_t x);

}  // namespace boolift
