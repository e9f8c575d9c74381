#include "boolift/families.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "boolift/bitvector.hpp"
#include "boolift/error.hpp"

namespace boolift {

namespace {

BigInt power(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

BigInt big_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_br_args(int q, int n, int d, int r) {
  if (q < 2 || n < 0 || d < 0 || r < 0) throw PreconditionError("B_r needs q >= 2 and n, d, r >= 0");
  if (n < d + 2 * r) throw PreconditionError("B_r needs n >= d + 2r");
}

std::size_t first_clear(const BitVector& v, std::size_t from) {
  const auto words = v.words();
  for (std::size_t i = from / 64; i < words.size(); ++i) {
    std::uint64_t w = ~words[i];
    if (i == from / 64) w &= ~std::uint64_t{0} << (from % 64);
    if (w) return std::min(v.size(), i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }
  return v.size();
}

}  // namespace

QaryFamily br_enumerate(int q, int n, int d, int r, const Limits& limits) {
  check_br_args(q, n, d, r);
  if (q > 255) throw PreconditionError("br_enumerate supports q <= 255");
  BigInt total = power(q, n);
  if (total > limits.max_enumeration)
    throw CapExceeded("br_enumerate: q^n exceeds enumeration cap " + std::to_string(limits.max_enumeration));
  QaryFamily fam;
  fam.q = q;
  fam.n = n;
  const int head = d + 2 * r;
  std::vector<std::uint8_t> x(static_cast<std::size_t>(n), 1);
  while (true) {
    int ones = 0;
    for (int i = 0; i < head; ++i) ones += x[static_cast<std::size_t>(i)] == 1;
    if (ones >= d + r) fam.members.push_back(x);
    int i = n - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == q) x[static_cast<std::size_t>(i--)] = 1;
    if (i < 0) break;
    ++x[static_cast<std::size_t>(i)];
  }
  return fam;
}

BigInt br_size(int q, int n, int d, int r) {
  check_br_args(q, n, d, r);
  const int head = d + 2 * r;
  BigInt s = 0;
  for (int j = d + r; j <= head; ++j) s += big_binomial(head, j) * power(q - 1, head - j);
  return s * power(q, n - head);
}

BigInt br_inter_bound(int q, int n, int d, int r) {
  check_br_args(q, n, d, r);
  return big_binomial(d + 2 * r, d + r) * power(q, n - d - r);
}

int agr_radius(int q, int d) {
  if (q < 3) throw PreconditionError("agr needs q >= 3");
  if (d < 1) throw PreconditionError("agr needs d >= 1");
  return (d - 1) / (q - 2);
}

BigInt agr(int q, int n, int d) {
  const int r = agr_radius(q, d);
  if (n < d + 2 * r) throw PreconditionError("agr needs n >= d + 2r");
  return br_size(q, n, d, r);
}

IntersectingCheck intersecting_check(const QaryFamily& fam, int d, const Limits& limits) {
  IntersectingCheck out;
  const std::size_t m = fam.size();
  if (m < 2 || d <= 0) return out;
  if (d > fam.n) {
    out.ok = false;
    out.first = 0;
    out.second = 1;
    return out;
  }
  const std::uint64_t words = (m + 63) / 64;
  if (static_cast<std::uint64_t>(m) * words * static_cast<std::uint64_t>(fam.n) * static_cast<std::uint64_t>(d) >
      limits.max_search)
    throw CapExceeded("intersecting_check work exceeds search cap");
  // by_symbol[i][a]: members whose coordinate i is a.
  std::vector<std::vector<BitVector>> by_symbol(static_cast<std::size_t>(fam.n),
                                                std::vector<BitVector>(static_cast<std::size_t>(fam.q) + 1, BitVector(m)));
  for (std::size_t s = 0; s < m; ++s)
    for (int i = 0; i < fam.n; ++i) by_symbol[static_cast<std::size_t>(i)][fam.members[s][static_cast<std::size_t>(i)]].set(s);
  // at_least[t] marks members agreeing with the current one on > t coordinates.
  std::vector<BitVector> at_least(static_cast<std::size_t>(d), BitVector(m));
  for (std::size_t s = 0; s + 1 < m; ++s) {
    for (auto& b : at_least) b = BitVector(m);
    for (int i = 0; i < fam.n; ++i) {
      const BitVector& same = by_symbol[static_cast<std::size_t>(i)][fam.members[s][static_cast<std::size_t>(i)]];
      const auto sw = same.words();
      for (std::size_t t = static_cast<std::size_t>(d); t-- > 1;) {
        auto hi = at_least[t].words();
        const auto lo = at_least[t - 1].words();
        for (std::size_t w = s / 64; w < hi.size(); ++w) hi[w] |= lo[w] & sw[w];
      }
      auto first = at_least[0].words();
      for (std::size_t w = s / 64; w < first.size(); ++w) first[w] |= sw[w];
    }
    const BitVector& enough = at_least[static_cast<std::size_t>(d) - 1];
    const std::size_t o = first_clear(enough, s + 1);
    if (o < m) {
      out.ok = false;
      out.first = s;
      out.second = o;
      return out;
    }
  }
  return out;
}

bool packing_check(int q, int n, int d) {
  if (q < 3) throw PreconditionError("packing_check needs q >= 3");
  if (d < 1 || 3 * d > n) throw PreconditionError("packing_check needs 1 <= d <= n/3");
  const BigInt a = agr(q, n, d);
  return pow(a, 10) < power(q, 10 * n - d);
}

bool largeq_applies(int q, int n, int d) {
  if (q < 3 || d < 1 || n < 1) return false;
  // e^2 < 7.389056098930651, so q d^2 > 7.389056098930651 n^2 suffices.
  const BigInt lhs = BigInt(q) * d * d * BigInt("1000000000000000");
  const BigInt rhs = BigInt("7389056098930651") * n * n;
  return lhs > rhs;
}

bool largeq_check(int q, int n, int d) {
  if (!largeq_applies(q, n, d)) throw PreconditionError("largeq_check needs q > (e n / d)^2");
  if (d > n) throw PreconditionError("largeq_check needs d <= n");
  const BigInt a = agr(q, n, d);
  return pow(a, 4) < power(q, 4 * n - d);
}

std::string render_family(const QaryFamily& fam) {
  std::string out;
  for (const auto& x : fam.members) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (fam.q > 9 && i) out += ',';
      out += std::to_string(x[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace boolift
