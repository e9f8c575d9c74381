#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "boolift/limits.hpp"

namespace boolift {

using BigInt = boost::multiprecision::cpp_int;

/// Explicit family of strings over the alphabet {1..q}.
struct QaryFamily {
  int q = 0;
  int n = 0;
  std::vector<std::vector<std::uint8_t>> members;

  std::size_t size() const { return members.size(); }
};

/// Strings x in [q]^n with at least d + r ones among the first d + 2r
/// coordinates, in lexicographic order.
QaryFamily br_enumerate(int q, int n, int d, int r, const Limits& limits = {});

/// Exact |B_r| = sum_{j=d+r}^{d+2r} C(d+2r, j) (q-1)^{d+2r-j} q^{n-d-2r}.
BigInt br_size(int q, int n, int d, int r);

/// C(d+2r, d+r) q^{n-d-r}.
BigInt br_inter_bound(int q, int n, int d, int r);

/// floor((d-1)/(q-2)); requires q >= 3, d >= 1.
int agr_radius(int q, int d);

/// Maximum size of a d-intersecting family in [q]^n (q >= 3).
BigInt agr(int q, int n, int d);

struct IntersectingCheck {
  bool ok = true;
  std::size_t first = 0;  // indices of a violating pair
  std::size_t second = 0;
};

/// Every two members agree on at least d coordinates.
IntersectingCheck intersecting_check(const QaryFamily& fam, int d, const Limits& limits = {});

/// agr(q,n,d)^10 < q^{10n-d}; requires q >= 3 and 1 <= d <= n/3.
bool packing_check(int q, int n, int d);

/// True iff q > (e n / d)^2 is certain (exact rational bounds on e^2).
bool largeq_applies(int q, int n, int d);

/// agr(q,n,d)^4 < q^{4n-d}; requires largeq_applies.
bool largeq_check(int q, int n, int d);

/// Newline-delimited strings; symbols are digits when q <= 9 and
/// comma-separated otherwise.
std::string render_family(const QaryFamily& fam);

}  // namespace boolift
