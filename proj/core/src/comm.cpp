#include "boolift/comm.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "boolift/coloring.hpp"
#include "boolift/combinatorics.hpp"
#include "boolift/error.hpp"
#include "boolift/rank.hpp"

namespace boolift {

namespace {

struct PairHash {
  std::size_t operator()(const std::pair<BitVector, BitVector>& p) const {
    return p.first.hash() * 31 + p.second.hash();
  }
};

void require_total(const CommMatrix& m, const char* op) {
  if (!m.is_total())
    throw PreconditionError(std::string(op) + " requires a total matrix; use one_way_cc_partial");
}

}  // namespace

CommMatrix comm_matrix(const ComposedFunction& cf, const Limits& limits) {
  const int a = cf.alice_arity(), b = cf.bob_arity();
  if (a + b > 62 || (std::uint64_t{1} << (a + b)) > limits.max_cells)
    throw CapExceeded("communication matrix of 2^" + std::to_string(a + b) + " cells exceeds cap of " +
                      std::to_string(limits.max_cells));
  const auto& g = cf.gadget();
  const auto& f = cf.outer();
  const int n = cf.blocks(), b1 = g.alice_bits(), b2 = g.bob_bits();
  const std::uint64_t rows = std::uint64_t{1} << a, cols = std::uint64_t{1} << b;
  const std::uint64_t m1 = (std::uint64_t{1} << b1) - 1, bob_vals = std::uint64_t{1} << b2;

  CommMatrix m;
  m.row_count = rows;
  m.col_count = cols;
  m.rows.assign(rows, BitVector(cols));
  const bool total = f.is_total();
  if (!total) m.defined.assign(rows, BitVector(cols));

  std::vector<std::uint32_t> z(cols);
  for (std::uint64_t x = 0; x < rows; ++x) {
    // z[y] = inner vector, filled block by block.
    std::uint64_t filled = 1;
    z[0] = 0;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t xa = (x >> (i * b1)) & m1;
      for (std::uint64_t yb = bob_vals; yb-- > 0;) {
        const std::uint32_t bit = g(xa, yb) ? (std::uint32_t{1} << i) : 0;
        const std::uint64_t base = yb * filled;
        for (std::uint64_t lo = 0; lo < filled; ++lo) z[base + lo] = z[lo] | bit;
      }
      filled *= bob_vals;
    }
    BitVector& row = m.rows[x];
    for (std::uint64_t y = 0; y < cols; ++y) {
      if (f(z[y])) row.set(y);
      if (!total && f.defined(z[y])) m.defined[x].set(y);
    }
  }
  return m;
}

std::size_t distinct_row_count(const CommMatrix& m) {
  std::unordered_set<BitVector, BitVectorHash> seen(m.rows.begin(), m.rows.end());
  return seen.size();
}

int one_way_cc(const CommMatrix& m) {
  require_total(m, "one_way_cc");
  return ceil_log2(distinct_row_count(m));
}

PartialCc one_way_cc_partial(const CommMatrix& m, const Limits& limits) {
  PartialCc out;
  out.row_color.assign(m.rows.size(), 0);
  if (m.rows.empty()) return out;
  const BitVector all(m.col_count, true);
  std::unordered_map<std::pair<BitVector, BitVector>, std::size_t, PairHash> cls;
  std::vector<std::size_t> row_class(m.rows.size());
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < m.rows.size(); ++x) {
    auto key = std::make_pair(m.rows[x], m.is_total() ? all : m.defined[x]);
    auto [it, inserted] = cls.emplace(std::move(key), reps.size());
    if (inserted) {
      reps.push_back(x);
      if (reps.size() > limits.max_row_classes)
        throw CapExceeded("one_way_cc_partial: more than " + std::to_string(limits.max_row_classes) +
                          " distinct row classes");
    }
    row_class[x] = it->second;
  }
  out.row_classes = reps.size();
  Graph g(reps.size());
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const BitVector& ri = m.rows[reps[i]];
    const BitVector& di = m.is_total() ? all : m.defined[reps[i]];
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      const BitVector& rj = m.rows[reps[j]];
      const BitVector& dj = m.is_total() ? all : m.defined[reps[j]];
      if (((ri ^ rj) & di).intersects(dj)) g.add_edge(i, j);
    }
  }
  const Coloring col = chromatic_number(g, limits.max_search);
  out.chromatic = col.colors;
  out.cc = ceil_log2(col.colors);
  for (std::size_t x = 0; x < m.rows.size(); ++x) out.row_color[x] = col.color[row_class[x]];
  return out;
}

std::size_t matrix_rank(const CommMatrix& m, const Limits& limits) {
  require_total(m, "matrix_rank");
  return matrix_rank(m.rows, limits);
}

VcResult vc_dim_bruteforce(const CommMatrix& m, int cap_d, const Limits& limits) {
  require_total(m, "vc_dim_bruteforce");
  VcResult out;
  if (cap_d <= 0 || m.rows.empty()) {
    out.capped = cap_d <= 0;
    return out;
  }
  cap_d = std::min(cap_d, 30);
  std::vector<BitVector> rows;
  {
    std::unordered_set<BitVector, BitVectorHash> seen;
    for (const auto& r : m.rows)
      if (seen.insert(r).second) rows.push_back(r);
  }
  // Distinct non-constant columns as bit vectors over the distinct rows.
  std::vector<BitVector> cols;
  std::vector<std::uint64_t> col_id;
  {
    std::unordered_set<BitVector, BitVectorHash> seen;
    for (std::uint64_t y = 0; y < m.col_count; ++y) {
      BitVector c(rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r].test(y)) c.set(r);
      if (c.none() || c.all()) continue;
      if (seen.insert(c).second) {
        cols.push_back(std::move(c));
        col_id.push_back(y);
      }
    }
  }
  std::uint64_t work = 0;
  auto shattered = [&](const std::vector<std::size_t>& set) {
    const std::size_t d = set.size();
    work += rows.size() * d;
    if (work > limits.max_search) throw CapExceeded("vc_dim_bruteforce exceeds search cap");
    BitVector hit(std::size_t{1} << d);
    std::size_t distinct = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint64_t p = 0;
      for (std::size_t k = 0; k < d; ++k)
        if (cols[set[k]].test(r)) p |= std::uint64_t{1} << k;
      if (!hit.test(p)) {
        hit.set(p);
        if (++distinct == hit.size()) return true;
      }
    }
    return false;
  };
  std::vector<std::vector<std::size_t>> level;
  for (std::size_t c = 0; c < cols.size(); ++c) level.push_back({c});
  if (level.empty()) return out;
  out.vc = 1;
  out.columns = {col_id[level.front()[0]]};
  while (out.vc < cap_d) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : level) {
      for (std::size_t c = s.back() + 1; c < cols.size(); ++c) {
        auto t = s;
        t.push_back(c);
        if (shattered(t)) next.push_back(std::move(t));
      }
    }
    if (next.empty()) return out;
    level = std::move(next);
    ++out.vc;
    out.columns.clear();
    for (auto c : level.front()) out.columns.push_back(col_id[c]);
  }
  out.capped = true;
  return out;
}

bool shattering_check(const CommMatrix& m, const std::vector<std::uint64_t>& columns) {
  const std::size_t d = columns.size();
  if (d > 30) throw CapExceeded("shattering_check supports at most 30 columns");
  BitVector hit(std::size_t{1} << d);
  for (std::size_t x = 0; x < m.rows.size(); ++x) {
    std::uint64_t p = 0;
    bool ok = true;
    for (std::size_t k = 0; k < d && ok; ++k) {
      ok = m.defined_at(x, columns[k]);
      if (m.at(x, columns[k])) p |= std::uint64_t{1} << k;
    }
    if (ok) hit.set(p);
  }
  return hit.all();
}

ShatterWitness ip_shattering_witness(const BooleanFunction& f, int b, const Limits& limits) {
  if (!f.is_total()) throw PreconditionError("ip_shattering_witness requires a total function");
  if (b < 1) throw PreconditionError("ip_shattering_witness needs b >= 1");
  const int n = f.arity();
  ShatterWitness w;
  w.n = n;
  w.b = b;
  const auto dep = depends_on_all(f);
  if (!dep.depends_on_all)
    throw PreconditionError("function does not depend on input " + std::to_string(dep.missing().front() + 1));
  if (b == 1) return w;
  if (n * b > limits.max_composed_bits) throw CapExceeded("ip_shattering_witness: n*b exceeds cap");
  const int d = n * (b - 1);
  if (d > 24 || (std::uint64_t{1} << d) > limits.max_search)
    throw CapExceeded("ip_shattering_witness: 2^{n(b-1)} patterns exceed cap");
  for (int i = 0; i < n; ++i) {
    const std::uint64_t z = *dep.witness[static_cast<std::size_t>(i)];
    w.base_points.push_back(z);
    w.base_values.push_back(f(z));
  }
  for (int i = 0; i < n; ++i) {
    const std::uint64_t z = w.base_points[static_cast<std::size_t>(i)];
    for (int j = 2; j <= b; ++j) {
      std::uint64_t y = 0;
      for (int k = 0; k < n; ++k) {
        if (k == i) {
          y |= std::uint64_t{1} << (k * b + (j - 1));
        } else if ((z >> k) & 1u) {
          y |= std::uint64_t{1} << (k * b);
        }
      }
      w.columns.push_back(y);
    }
  }
  w.rows.reserve(std::size_t{1} << d);
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << d); ++c) {
    std::uint64_t x = 0;
    for (int i = 0; i < n; ++i) {
      x |= std::uint64_t{1} << (i * b);
      const bool v = w.base_values[static_cast<std::size_t>(i)];
      for (int j = 2; j <= b; ++j) {
        const bool cij = (c >> (i * (b - 1) + (j - 2))) & 1u;
        if (cij != v) x |= std::uint64_t{1} << (i * b + (j - 1));
      }
    }
    w.rows.push_back(x);
  }
  return w;
}

bool witness_realizes_patterns(const BooleanFunction& f, const ShatterWitness& w) {
  if (w.b <= 1) return true;
  const ComposedFunction cf(f, gadgets::ip(w.b));
  for (std::size_t c = 0; c < w.rows.size(); ++c)
    for (std::size_t t = 0; t < w.columns.size(); ++t)
      if (cf.value(w.rows[c], w.columns[t]) != static_cast<bool>((c >> t) & 1u)) return false;
  return true;
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("binary_entropy needs 0 <= p <= 1");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1 - p) * std::log2(1 - p);
}

double klauck_bound(double vc, double eps, bool entangled) {
  if (!(eps >= 0.0 && eps < 0.5)) throw PreconditionError("klauck_bound needs 0 <= eps < 1/2");
  const double v = (1 - binary_entropy(eps)) * vc;
  return entangled ? v / 2 : v;
}

GadgetCheck gadget_property_check(const GadgetSpec& g, const Limits& limits) {
  const std::uint64_t na = std::uint64_t{1} << g.alice_bits();
  if (na > limits.max_gadget_alice)
    throw CapExceeded("gadget_property_check: 2^b1 = " + std::to_string(na) + " exceeds cap " +
                      std::to_string(limits.max_gadget_alice));
  const std::uint64_t nb = std::uint64_t{1} << g.bob_bits();
  Graph rel(na);
  for (std::uint64_t x1 = 0; x1 < na; ++x1)
    for (std::uint64_t x2 = x1 + 1; x2 < na; ++x2) {
      unsigned seen = 0;
      for (std::uint64_t y = 0; y < nb && seen != 15u; ++y) seen |= 1u << (2 * g(x1, y) + g(x2, y));
      if (seen == 15u) rel.add_edge(x1, x2);
    }
  GadgetCheck out;
  for (auto v : max_clique_lex(rel, limits.max_search)) out.witness.push_back(v);
  out.ok = out.witness.size() >= 3;
  return out;
}

LiftAudit lift_audit(const BooleanFunction& f, int b, const Limits& limits) {
  if (b < 2) throw PreconditionError("lift_audit needs b >= 2 (q = 2^b - 1 >= 3)");
  const int n = f.arity();
  const std::uint64_t q = (std::uint64_t{1} << b) - 1;
  const auto cf = compose(f, gadgets::ip(b), limits);
  const auto m = comm_matrix(cf, limits);
  const auto part = one_way_cc_partial(m, limits);

  LiftAudit a;
  a.n = n;
  a.b = b;
  a.cc = part.cc;
  a.colors = part.chromatic;
  a.c_messages = part.cc / std::log2(static_cast<double>(q));

  const std::uint64_t bm = q;
  auto in_z = [&](std::uint64_t x) {
    for (int i = 0; i < n; ++i)
      if (((x >> (i * b)) & bm) == 0) return false;
    return true;
  };
  std::vector<std::size_t> count(part.chromatic, 0);
  for (std::uint64_t x = 0; x < m.row_count; ++x)
    if (in_z(x)) ++count[static_cast<std::size_t>(part.row_color[x])];
  std::size_t heavy = 0;
  for (std::size_t c = 1; c < count.size(); ++c)
    if (count[c] > count[heavy]) heavy = c;
  a.heavy_color = static_cast<int>(heavy);
  a.heavy_part_size = count.empty() ? 0 : count[heavy];

  std::vector<std::uint64_t> members;
  for (std::uint64_t x = 0; x < m.row_count; ++x)
    if (in_z(x) && part.row_color[x] == static_cast<int>(heavy)) members.push_back(x);
  auto agree = [&](std::uint64_t x1, std::uint64_t x2) {
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i)
      if (((x1 >> (i * b)) & bm) == ((x2 >> (i * b)) & bm)) mask |= std::uint64_t{1} << i;
    return mask;
  };
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  if (members.size() <= 1) {
    a.x1 = a.x2 = members.empty() ? 0 : members.front();
    a.agreement = all;
  } else {
    if (static_cast<std::uint64_t>(members.size()) * members.size() / 2 > limits.max_search)
      throw CapExceeded("lift_audit pair search exceeds search cap");
    int best = n + 1;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const std::uint64_t mask = agree(members[i], members[j]);
        if (std::popcount(mask) < best) {
          best = std::popcount(mask);
          a.x1 = members[i];
          a.x2 = members[j];
          a.agreement = mask;
        }
      }
  }
  a.agreement_size = std::popcount(a.agreement);
  a.determined = is_determined_by(f, a.agreement);
  a.small_agreement = a.agreement_size < 10 * a.c_messages;
  a.precondition = a.c_messages < n / 30.0;
  return a;
}

std::string to_pbm(const CommMatrix& m) {
  std::string out = "P1\n" + std::to_string(m.col_count) + " " + std::to_string(m.row_count) + "\n";
  for (std::uint64_t x = 0; x < m.row_count; ++x) {
    for (std::uint64_t y = 0; y < m.col_count; ++y) {
      if (y) out += ' ';
      out += m.at(x, y) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

std::vector<std::string> rows_hex(const CommMatrix& m) {
  std::vector<std::string> out;
  out.reserve(m.rows.size());
  for (const auto& r : m.rows) out.push_back(table_to_hex(r));
  return out;
}

}  // namespace boolift
