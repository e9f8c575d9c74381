#include <gtest/gtest.h>

#include <random>

#include "boolift/comm.hpp"
#include "boolift/error.hpp"
#include "boolift/families.hpp"
#include "boolift/function_spec.hpp"
#include "boolift/transforms.hpp"
#include "oracles.hpp"

using namespace boolift;

namespace {

CommMatrix matrix_of(const BooleanFunction& f, const GadgetSpec& g) { return comm_matrix(compose(f, g)); }

std::vector<std::vector<int>> dense(const CommMatrix& m) {
  std::vector<std::vector<int>> out(m.row_count, std::vector<int>(m.col_count));
  for (std::uint64_t x = 0; x < m.row_count; ++x)
    for (std::uint64_t y = 0; y < m.col_count; ++y) out[x][y] = m.at(x, y);
  return out;
}

int brute_vc(const CommMatrix& m) {
  int best = 0;
  for (std::uint64_t cols = 1; cols < (std::uint64_t{1} << m.col_count); ++cols) {
    const int d = std::popcount(cols);
    if (d <= best) continue;
    std::set<std::uint64_t> seen;
    for (std::uint64_t x = 0; x < m.row_count; ++x) {
      std::uint64_t p = 0;
      int k = 0;
      for (std::uint64_t y = 0; y < m.col_count; ++y)
        if ((cols >> y) & 1u) p |= std::uint64_t{m.at(x, y)} << k++;
      seen.insert(p);
    }
    if (seen.size() == (std::size_t{1} << d)) best = d;
  }
  return best;
}

}  // namespace

TEST(Comm, MatrixMatchesDirectComposition) {
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 3; ++n) {
    const auto f = oracle::random_function(n, rng);
    EXPECT_EQ(dense(matrix_of(f, gadgets::and2())), oracle::composed_matrix(f, 1, 1, [](auto a, auto b) { return a & b; }));
    EXPECT_EQ(dense(matrix_of(f, gadgets::xor2())), oracle::composed_matrix(f, 1, 1, [](auto a, auto b) { return a ^ b; }));
    EXPECT_EQ(dense(matrix_of(f, gadgets::ip(2))),
              oracle::composed_matrix(f, 2, 2, [](auto a, auto b) { return std::popcount(a & b) & 1; }));
  }
}

TEST(Comm, OneWayCcMatchesDistinctRows) {
  std::mt19937_64 rng(10);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 5; ++t) {
      const auto f = oracle::random_function(n, rng);
      const auto m = matrix_of(f, gadgets::and2());
      const auto d = dense(m);
      EXPECT_EQ(one_way_cc(m), oracle::distinct_rows_log(d));
      EXPECT_EQ(distinct_row_count(m), std::set<std::vector<int>>(d.begin(), d.end()).size());
    }
}

TEST(Comm, RankMatchesRationalOracle) {
  std::mt19937_64 rng(13);
  for (int n = 1; n <= 4; ++n) {
    const auto f = oracle::random_function(n, rng);
    const auto m = matrix_of(f, gadgets::and2());
    std::vector<std::vector<oracle::Rational>> a;
    for (const auto& row : dense(m)) a.emplace_back(row.begin(), row.end());
    EXPECT_EQ(matrix_rank(m), oracle::rational_rank(a));
    EXPECT_EQ(matrix_rank(m), mobius_sparsity(f));
  }
}

TEST(Comm, KnownOneWayValues) {
  for (int n = 1; n <= 8; ++n)
    EXPECT_EQ(one_way_cc(matrix_of(named::omb(n), gadgets::and2())), oracle::ceil_log2(static_cast<std::size_t>(n) + 1));
  EXPECT_EQ(one_way_cc(matrix_of(named::addr(4), gadgets::xor2())), 6);
}

TEST(Comm, PartialOmbPrimeWithIp) {
  const auto m = matrix_of(named::omb_prime(3), gadgets::ip(2));
  EXPECT_FALSE(m.is_total());
  const auto p = one_way_cc_partial(m);
  EXPECT_EQ(p.row_classes, 64u);
  EXPECT_EQ(p.chromatic, 13u);
  EXPECT_EQ(p.cc, 4);
  EXPECT_THROW(one_way_cc(m), PreconditionError);
}

TEST(Comm, PartialCcEqualsTotalOnTotalMatrices) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 5; ++t) {
    const auto m = matrix_of(oracle::random_function(3, rng), gadgets::and2());
    EXPECT_EQ(one_way_cc_partial(m).cc, one_way_cc(m));
  }
}

TEST(Comm, VcDimensionMatchesBruteForce) {
  std::mt19937_64 rng(15);
  for (int n = 1; n <= 3; ++n)
    for (int t = 0; t < 4; ++t) {
      const auto m = matrix_of(oracle::random_function(n, rng), gadgets::and2());
      const auto v = vc_dim_bruteforce(m, 8);
      EXPECT_EQ(v.vc, brute_vc(m));
      EXPECT_TRUE(shattering_check(m, v.columns));
    }
  const auto capped = vc_dim_bruteforce(matrix_of(named::xor_fn(3), gadgets::ip(2)), 2);
  EXPECT_TRUE(capped.capped);
  EXPECT_EQ(capped.vc, 2);
}

TEST(Comm, IpWitnessShatters) {
  for (const auto& text : {"maj:3", "xor:3", "omb:3", "addr:2", "and:2"})
    for (int b : {2, 3}) {
      const auto f = build_named(text);
      const auto w = ip_shattering_witness(f, b);
      EXPECT_EQ(w.columns.size(), w.expected_size()) << text;
      EXPECT_EQ(w.rows.size(), std::size_t{1} << w.columns.size());
      EXPECT_TRUE(shattering_check(matrix_of(f, gadgets::ip(b)), w.columns)) << text << " b=" << b;
      EXPECT_TRUE(witness_realizes_patterns(f, w)) << text;
    }
  const auto lazy = BooleanFunction::from_predicate(3, [](std::uint64_t x) { return (x & 1u) != 0; });
  EXPECT_THROW(ip_shattering_witness(lazy, 2), PreconditionError);
}

TEST(Comm, KlauckBound) {
  EXPECT_NEAR(binary_entropy(0.5), 1.0, 1e-15);
  EXPECT_NEAR(klauck_bound(6, 1.0 / 3.0, false), 0.490225, 1e-6);
  EXPECT_NEAR(klauck_bound(6, 1.0 / 3.0, true), 0.2451125, 1e-6);
  EXPECT_THROW(klauck_bound(1, 0.5, false), PreconditionError);
}

TEST(Comm, GadgetProperty) {
  EXPECT_FALSE(gadget_property_check(gadgets::and2()).ok);
  EXPECT_FALSE(gadget_property_check(gadgets::xor2()).ok);
  const auto ip2 = gadget_property_check(gadgets::ip(2));
  EXPECT_TRUE(ip2.ok);
  EXPECT_EQ(ip2.witness, (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_TRUE(gadget_property_check(gadgets::ip(3)).ok);
}

TEST(Comm, LiftAudit) {
  const auto a = lift_audit(named::omb_prime(3), 2);
  EXPECT_EQ(a.cc, 4);
  EXPECT_EQ(a.colors, 13u);
  EXPECT_GE(a.heavy_part_size, 1u);
  EXPECT_NEAR(a.c_messages, 4 / std::log2(3.0), 1e-12);
  EXPECT_TRUE(a.determined);
  EXPECT_FALSE(a.precondition);
}

TEST(Comm, Renderers) {
  const auto m = matrix_of(named::and_fn(1), gadgets::and2());
  EXPECT_EQ(to_pbm(m), "P1\n2 2\n0 0\n0 1\n");
  EXPECT_EQ(rows_hex(m), (std::vector<std::string>{"0", "2"}));
}

TEST(Comm, CellCap) {
  Limits l;
  l.max_cells = 1000;
  EXPECT_THROW(comm_matrix(compose(named::omb(6), gadgets::and2()), l), CapExceeded);
}

TEST(Families, SizeMatchesEnumeration) {
  for (int q : {3, 4})
    for (int n = 1; n <= 6; ++n)
      for (int d = 0; d <= 3 && d <= n; ++d)
        for (int r = 0; d + 2 * r <= n; ++r) {
          const auto fam = br_enumerate(q, n, d, r);
          EXPECT_EQ(br_size(q, n, d, r), fam.size());
          EXPECT_LE(br_size(q, n, d, r), br_inter_bound(q, n, d, r));
          EXPECT_TRUE(intersecting_check(fam, d).ok);
          EXPECT_TRUE(std::is_sorted(fam.members.begin(), fam.members.end()));
        }
}

TEST(Families, AgrValues) {
  EXPECT_EQ(agr_radius(3, 3), 2);
  EXPECT_EQ(agr_radius(4, 3), 1);
  EXPECT_EQ(agr(3, 9, 3), 891);
  EXPECT_EQ(br_enumerate(3, 9, 3, 2).size(), 891u);
  EXPECT_THROW(agr_radius(2, 1), PreconditionError);
  EXPECT_THROW(br_size(3, 4, 3, 1), PreconditionError);
}

TEST(Families, IntersectingCheckFindsViolation) {
  QaryFamily fam{3, 3, {{1, 1, 1}, {1, 2, 2}, {2, 2, 1}}};
  EXPECT_TRUE(intersecting_check(fam, 1).ok);
  const auto r = intersecting_check(fam, 2);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.first, 0u);
  EXPECT_EQ(r.second, 1u);
}

TEST(Families, PackingAndLargeQ) {
  EXPECT_TRUE(packing_check(3, 9, 3));
  EXPECT_TRUE(packing_check(10, 60, 20));
  EXPECT_TRUE(largeq_applies(100, 9, 3));
  EXPECT_FALSE(largeq_applies(66, 9, 3));  // (3e)^2 ~ 66.5
  EXPECT_TRUE(largeq_check(1000, 10, 1));
  EXPECT_THROW(largeq_check(3, 9, 3), PreconditionError);
  EXPECT_THROW(packing_check(3, 8, 3), PreconditionError);
}

TEST(Families, Render) {
  QaryFamily small{3, 2, {{1, 2}, {3, 1}}};
  EXPECT_EQ(render_family(small), "12\n31\n");
  QaryFamily wide{12, 2, {{10, 2}}};
  EXPECT_EQ(render_family(wide), "10,2\n");
}
