#include "boolift/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "boolift/boolean_function.hpp"
#include "boolift/combinatorics.hpp"
#include "boolift/comm.hpp"
#include "boolift/error.hpp"
#include "boolift/families.hpp"
#include "boolift/patterns.hpp"
#include "boolift/query_models.hpp"
#include "boolift/transforms.hpp"

namespace boolift::acceptance {

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

std::string show(const BooleanFunction& f) { return serialize_function(f); }

BooleanFunction random_function(int n, std::mt19937_64& rng) {
  BitVector t(std::size_t{1} << n);
  for (std::size_t w = 0; w < t.word_count(); ++w) t.words()[w] = rng();
  if (t.size() < 64) t.words()[0] &= (std::uint64_t{1} << t.size()) - 1;
  return BooleanFunction::from_table(n, std::move(t));
}

BooleanFunction function_from_index(int n, std::uint64_t index) {
  BitVector t(std::size_t{1} << n);
  t.words()[0] = index;
  return BooleanFunction::from_table(n, std::move(t));
}

std::uint64_t stream_seed(std::uint64_t seed, int criterion, int n) {
  return seed * 1000003ull + static_cast<std::uint64_t>(criterion) * 1009ull + static_cast<std::uint64_t>(n);
}

/// Every function with 1 <= n <= 3, then `random_count` seeded functions at
/// each n in [4, 8].
template <class Visit>
std::size_t for_population(const Options& o, int criterion, Visit visit) {
  std::size_t count = 0;
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (1u << n)); ++idx, ++count)
      visit(function_from_index(n, idx));
  const int random_count = o.level == Level::Full ? 1000 : 60;
  for (int n = 4; n <= 8; ++n) {
    std::mt19937_64 rng(stream_seed(o.seed, criterion, n));
    for (int i = 0; i < random_count; ++i, ++count) visit(random_function(n, rng));
  }
  return count;
}

int oneway_and(const BooleanFunction& f, const Limits& limits) {
  return one_way_cc(comm_matrix(compose(f, gadgets::and2(), limits), limits));
}

CriterionResult pattern_cc(const Options& o) {
  CriterionResult r;
  const auto count = for_population(o, 1, [&](const BooleanFunction& f) {
    const int cc = oneway_and(f, o.limits);
    const auto pat = pattern_complexity(f, o.limits);
    require(cc == ceil_log2(pat), "cc " + std::to_string(cc) + " != ceil log Pat(" + std::to_string(pat) +
                                      ") for " + show(f));
  });
  r.passed = true;
  r.detail = std::to_string(count) + " functions";
  return r;
}

CriterionResult sparsity_rank(const Options& o) {
  CriterionResult r;
  const auto count = for_population(o, 2, [&](const BooleanFunction& f) {
    const auto m = comm_matrix(compose(f, gadgets::and2(), o.limits), o.limits);
    const auto rank = matrix_rank(m, o.limits);
    const auto spar = mobius_sparsity(f);
    require(rank == spar, "rank " + std::to_string(rank) + " != spar " + std::to_string(spar) + " for " + show(f));
  });
  r.passed = true;
  r.detail = std::to_string(count) + " functions";
  return r;
}

CriterionResult pattern_bounds(const Options& o) {
  CriterionResult r;
  std::size_t traces = 0, steps = 0;
  const auto count = for_population(o, 3, [&](const BooleanFunction& f) {
    const auto pat = pattern_complexity(f, o.limits);
    const auto spar = mobius_sparsity(f);
    require(spar <= pat, "spar > Pat for " + show(f));
    require(cube_within_pow6(pat, spar, 8), "Pat above 2^{(log 6/3) spar + 1} for " + show(f));
    if (spar >= 2) {
      const auto t = pattern_growth_trace(f, o.limits);
      ++traces;
      steps += t.steps.size();
      for (const auto& s : t.steps) {
        require(s.bound_ok, "partial pattern bound fails at iteration " + std::to_string(s.iteration) + " for " + show(f));
        require(s.extension_ok, "extension bound fails at iteration " + std::to_string(s.iteration) + " for " + show(f));
      }
      require(t.final_ok && t.pattern_complexity == pat, "trace verdict fails for " + show(f));
    }
  });
  r.passed = true;
  r.detail = std::to_string(count) + " functions, " + std::to_string(traces) + " traces, " +
             std::to_string(steps) + " steps";
  return r;
}

CriterionResult omb_suite(const Options& o) {
  CriterionResult r;
  for (int n = 1; n <= 12; ++n) {
    const auto f = named::omb(n, o.limits);
    const std::size_t want = n % 2 == 0 ? n : n + 1;
    require(mobius_sparsity(f) == want, "spar(OMB_" + std::to_string(n) + ") = " +
                                            std::to_string(mobius_sparsity(f)));
    require(alternating_number(f, o.limits) == n, "alternating number of OMB_" + std::to_string(n));
  }
  const int naadt_max = o.level == Level::Full ? 5 : 4;
  for (int n = 1; n <= naadt_max; ++n) {
    const auto q = naadt_exact(named::omb(n, o.limits), {}, o.limits);
    require(q.k == n, "NAADT(OMB_" + std::to_string(n) + ") = " + std::to_string(q.k));
  }
  const int cc_max = o.level == Level::Full ? 10 : 8;
  for (int n = 1; n <= cc_max; ++n) {
    const int cc = oneway_and(named::omb(n, o.limits), o.limits);
    require(cc == ceil_log2(static_cast<std::uint64_t>(n) + 1),
            "cc(OMB_" + std::to_string(n) + " o AND) = " + std::to_string(cc));
  }
  r.passed = true;
  r.detail = "spar/alt n<=12, NAADT n<=" + std::to_string(naadt_max) + ", cc n<=" + std::to_string(cc_max);
  return r;
}

/// cc >= rank^{log_3 2}, i.e. cc >= 2^{log_3 rank}.
bool above_rank_power(int cc, std::size_t rank) {
  if (rank <= 1) return cc >= static_cast<int>(rank);
  int t = 0;
  std::uint64_t p = 1;
  while (p * 3 <= rank) {
    p *= 3;
    ++t;
  }
  const std::uint64_t lo = std::uint64_t{1} << t;
  if (p == rank) return static_cast<std::uint64_t>(cc) >= lo;
  if (static_cast<std::uint64_t>(cc) >= 2 * lo) return true;
  if (static_cast<std::uint64_t>(cc) <= lo) return false;
  return static_cast<long double>(cc) >= std::pow(2.0L, std::log(static_cast<long double>(rank)) / std::log(3.0L));
}

CriterionResult addr_suite(const Options& o) {
  CriterionResult r;
  std::ostringstream d;
  for (int n : {2, 4, 8}) {
    const auto f = named::addr(n, o.limits);
    std::size_t want = 1;
    for (int m = n; m > 1; m /= 2) want *= 3;
    const auto spar = mobius_sparsity(f);
    require(spar == want, "spar(ADDR_" + std::to_string(n) + ") = " + std::to_string(spar));
    d << "spar(ADDR_" << n << ")=" << spar << " ";
  }
  for (int n : {2, 4}) {
    const auto f = named::addr(n, o.limits);
    const auto pat = pattern_complexity(f, o.limits);
    require(pat >= (std::size_t{1} << n), "Pat(ADDR_" + std::to_string(n) + ") = " + std::to_string(pat));
    const auto m = comm_matrix(compose(f, gadgets::and2(), o.limits), o.limits);
    const int cc = one_way_cc(m);
    const auto rank = matrix_rank(m, o.limits);
    require(above_rank_power(cc, rank), "cc " + std::to_string(cc) + " < rank^{log_3 2} with rank " +
                                            std::to_string(rank) + " for ADDR_" + std::to_string(n));
    d << "Pat(ADDR_" << n << ")=" << pat << " cc=" << cc << " rank=" << rank << " ";
  }
  r.passed = true;
  r.detail = d.str();
  return r;
}

CriterionResult shatter_suite(const Options& o) {
  CriterionResult r;
  std::size_t checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (1u << n)); ++idx) {
      const auto f = function_from_index(n, idx);
      if (!depends_on_all(f).depends_on_all) continue;
      for (int b : {2, 3}) {
        if (o.level == Level::Fast && b == 3 && idx % 8 != 0) continue;
        const auto w = ip_shattering_witness(f, b, o.limits);
        require(w.columns.size() == static_cast<std::size_t>(n * (b - 1)), "witness size for " + show(f));
        const auto m = comm_matrix(compose(f, gadgets::ip(b), o.limits), o.limits);
        require(shattering_check(m, w.columns), "columns not shattered for " + show(f) + " b=" + std::to_string(b));
        require(witness_realizes_patterns(f, w), "witness rows wrong for " + show(f) + " b=" + std::to_string(b));
        if (b == 2) {
          const int cc = one_way_cc(m);
          require(cc >= n * (b - 1), "cc(f o IP_2) below n for " + show(f));
        }
        ++checked;
      }
    }
  r.passed = true;
  r.detail = std::to_string(checked) + " (f, b) instances";
  return r;
}

CriterionResult xor_napdt(const Options& o) {
  CriterionResult r;
  std::size_t checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (1u << n)); ++idx, ++checked) {
      const auto f = function_from_index(n, idx);
      const int cc = one_way_cc(comm_matrix(compose(f, gadgets::xor2(), o.limits), o.limits));
      const int napdt = napdt_exact(f, {}, o.limits).k;
      require(cc == napdt, "cc(f o XOR) " + std::to_string(cc) + " != NAPDT " + std::to_string(napdt) + " for " + show(f));
    }
  r.passed = true;
  r.detail = std::to_string(checked) + " functions";
  return r;
}

CriterionResult symmetric_naadt_suite(const Options& o) {
  CriterionResult r;
  std::ostringstream d;
  std::size_t plans = 0;
  const std::vector<int> sizes = o.level == Level::Full ? std::vector<int>{8, 12, 16} : std::vector<int>{8, 12};
  for (int n : sizes)
    for (int k = 1; k <= 3; ++k) {
      const auto bound = default_separating_size(n, k);
      const auto sf = separating_family(n, k, std::nullopt, 0, o.limits);
      require(separating_check(sf.family, n, k, o.limits).ok, "separating check fails");
      require(sf.attempts <= 8, "more than 8 attempts at n=" + std::to_string(n) + " k=" + std::to_string(k));
      require(sf.family.size() <= bound, "family larger than bound");
      // Symmetric f with switch exactly k: constant c below weight n-k,
      // flipped at n-k, free above.
      for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << (k + 1)); ++tail) {
        std::vector<bool> spec(static_cast<std::size_t>(n) + 1);
        const bool c = tail & 1u;
        for (int w = 0; w < n - k; ++w) spec[static_cast<std::size_t>(w)] = c;
        spec[static_cast<std::size_t>(n - k)] = !c;
        for (int w = n - k + 1; w <= n; ++w) spec[static_cast<std::size_t>(w)] = (tail >> (w - (n - k))) & 1u;
        const auto f = named::symmetric(spec, o.limits);
        require(switch_value(f) == k, "switch mismatch");
        const auto plan = symmetric_naadt(f, o.seed, o.limits);
        require(plan.family.size() <= bound, "plan family larger than bound");
        for (std::uint64_t x = 0; x < f.input_count(); ++x)
          if (symmetric_naadt_eval(plan, x) != f(x))
            throw Failure{"plan disagrees at x=" + std::to_string(x) + " for " + show(f)};
        ++plans;
      }
      d << "n=" << n << ",k=" << k << ":w=" << sf.family.size() << "/" << bound << ",tries=" << sf.attempts << " ";
    }
  r.passed = true;
  r.detail = std::to_string(plans) + " plans; " + d.str();
  return r;
}

CriterionResult naadt_bounds(const Options& o) {
  CriterionResult r;
  std::size_t checked = 0;
  QueryOptions unrestricted;
  unrestricted.unrestricted = true;
  unrestricted.start_at_lower_bound = false;
  std::mt19937_64 rng(stream_seed(o.seed, 9, 4));
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (1u << n);
    const bool sample = o.level == Level::Fast && n == 4;
    const std::uint64_t count = sample ? 3000 : total;
    for (std::uint64_t i = 0; i < count; ++i, ++checked) {
      const auto f = function_from_index(n, sample ? rng() % total : i);
      const auto spar = mobius_sparsity(f);
      const auto pruned = naadt_exact(f, {}, o.limits);
      const auto full = naadt_exact(f, unrestricted, o.limits);
      require(pruned.k == full.k, "pruned NAADT " + std::to_string(pruned.k) + " != unrestricted " +
                                      std::to_string(full.k) + " for " + show(f));
      require(and_family_determines(f, pruned.basis), "pruned basis does not determine " + show(f));
      const int k = full.k;
      require((std::uint64_t{1} << k) >= spar, "log spar > NAADT for " + show(f));
      require(static_cast<std::size_t>(k) <= spar && k <= n, "NAADT > spar for " + show(f));
      const int cc = oneway_and(f, o.limits);
      require(ceil_log2(static_cast<std::uint64_t>(k)) <= cc && cc <= k,
              "cc " + std::to_string(cc) + " outside [ceil log NAADT, NAADT] for " + show(f));
    }
  }
  r.passed = true;
  r.detail = std::to_string(checked) + " functions";
  return r;
}

CriterionResult intersecting_families(const Options& o) {
  CriterionResult r;
  std::size_t grid = 0, packs = 0;
  for (int q : {3, 4})
    for (int n = 1; n <= 9; ++n)
      for (int d = 0; d <= 3 && d <= n; ++d)
        for (int rr = 0; d + 2 * rr <= n; ++rr) {
          if (o.level == Level::Fast && q == 4 && n == 9) continue;
          const auto fam = br_enumerate(q, n, d, rr, o.limits);
          const BigInt size = br_size(q, n, d, rr);
          require(size == fam.size(), "br_size mismatch at q=" + std::to_string(q) + " n=" + std::to_string(n));
          require(size <= br_inter_bound(q, n, d, rr), "inter bound fails");
          require(intersecting_check(fam, d, o.limits).ok, "B_r not d-intersecting at q=" + std::to_string(q) +
                                                               " n=" + std::to_string(n) + " d=" + std::to_string(d));
          ++grid;
        }
  require(br_enumerate(3, 9, 3, 2, o.limits).size() == 891 && br_size(3, 9, 3, 2) == 891, "|B_2(3,9,3)| != 891");
  require(agr(3, 9, 3) == 891, "agr(3,9,3) != 891");
  for (int q = 3; q <= 10; ++q)
    for (int n = 3; n <= 60; ++n)
      for (int d = 1; 3 * d <= n; ++d, ++packs)
        require(packing_check(q, n, d), "packing fails at q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                            " d=" + std::to_string(d));
  const int spots[10][3] = {{100, 9, 3}, {67, 6, 2},  {119, 4, 1}, {30, 10, 5}, {67, 12, 4},
                            {30, 20, 10}, {67, 15, 5}, {31, 30, 15}, {1000, 10, 1}, {8, 3, 3}};
  for (const auto& s : spots) {
    require(largeq_applies(s[0], s[1], s[2]), "spot outside q > (en/d)^2");
    require(largeq_check(s[0], s[1], s[2]), "largeq fails at q=" + std::to_string(s[0]));
  }
  r.passed = true;
  r.detail = std::to_string(grid) + " grid points, " + std::to_string(packs) + " packing checks, 10 large-q spots";
  return r;
}

CriterionResult titsworth(const Options& o) {
  CriterionResult r;
  std::size_t checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << (1u << n)); ++idx, ++checked) {
      const auto f = function_from_index(n, idx);
      require(titsworth_check(f, o.limits).ok, "identity fails for " + show(f));
    }
  std::mt19937_64 rng(stream_seed(o.seed, 11, 8));
  const int random_count = o.level == Level::Full ? 1000 : 100;
  BooleanFunction last;
  for (int i = 0; i < random_count; ++i, ++checked) {
    last = random_function(8, rng);
    require(titsworth_check(last, o.limits).ok, "identity fails for " + show(last));
  }
  auto spec = mobius_spectrum(last);
  spec.coeffs[spec.coeffs.size() / 2].second += 1;
  const auto bad = titsworth_check(spec, o.limits);
  require(!bad.ok && bad.violating.has_value(), "corrupted spectrum passed");
  r.passed = true;
  r.detail = std::to_string(checked) + " functions; corrupted spectrum rejected at W=" + std::to_string(*bad.violating);
  return r;
}

CriterionResult symmetric_sparsity(const Options& o) {
  CriterionResult r;
  std::size_t checked = 0;
  const int per_n = o.level == Level::Full ? 200 : 50;
  for (int n : {8, 10, 12}) {
    std::mt19937_64 rng(stream_seed(o.seed, 12, n));
    for (int i = 0; i < per_n; ++i, ++checked) {
      std::vector<bool> spec(static_cast<std::size_t>(n) + 1);
      bool constant = true;
      while (constant) {
        const std::uint64_t bits = rng();
        for (int w = 0; w <= n; ++w) spec[static_cast<std::size_t>(w)] = (bits >> w) & 1u;
        constant = false;
        for (int w = 1; w <= n; ++w) constant = constant || spec[static_cast<std::size_t>(w)] != spec[0];
        constant = !constant;
      }
      const auto f = named::symmetric(spec, o.limits);
      const int k = switch_value(f);
      const std::uint64_t spar = mobius_sparsity(f);
      std::uint64_t sum = 0;
      for (int w = n - k; w <= n; ++w) sum += binomial(n, w);
      require(spar * spar >= sum, "spar^2 " + std::to_string(spar * spar) + " < " + std::to_string(sum) + " for " + show(f));
    }
  }
  r.passed = true;
  r.detail = std::to_string(checked) + " symmetric functions";
  return r;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "one-way cc of f o AND equals ceil log Pat(f)", 60, pattern_cc},
      {2, "Mobius sparsity equals rank of M_{f o AND}", 120, sparsity_rank},
      {3, "spar <= Pat <= 2^{(log 6/3) spar + 1} with per-step growth bound", 60, pattern_bounds},
      {4, "OMB sparsity, NAADT, one-way cc and alternating number", 30, omb_suite},
      {5, "ADDR sparsity, pattern complexity and cc vs rank^{log_3 2}", 60, addr_suite},
      {6, "IP shattered-set witness and cc(f o IP_2) >= n", 120, shatter_suite},
      {7, "one-way cc of f o XOR equals NAPDT", 120, xor_napdt},
      {8, "symmetric NAADT plans from separating families", 120, symmetric_naadt_suite},
      {9, "sparsity and one-way cc bounds around NAADT; pruned search exact", 300, naadt_bounds},
      {10, "B_r families, packing and large-q bounds", 60, intersecting_families},
      {11, "Mobius square identity and corrupted-spectrum control", 30, titsworth},
      {12, "symmetric sparsity lower bound", 30, symmetric_sparsity},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c, const Options& options) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = c.run(options);
  } catch (const Failure& f) {
    r.passed = false;
    r.detail = f.what;
  } catch (const Error& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.id = c.id;
  r.name = c.name;
  r.target_seconds = c.target_seconds;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(const Options& options) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) out.push_back(run_criterion(c, options));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s  [%2d] ", r.passed ? "PASS" : "FAIL", r.id);
  char timing[64];
  std::snprintf(timing, sizeof timing, " (%.2f s / %.0f s)", r.seconds, r.target_seconds);
  return std::string(head) + r.name + timing + (r.detail.empty() ? "" : ": " + r.detail);
}

}  // namespace boolift::acceptance
