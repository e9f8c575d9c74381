#include <gtest/gtest.h>

#include <random>

#include "boolift/boolean_function.hpp"
#include "boolift/error.hpp"
#include "boolift/patterns.hpp"
#include "boolift/query_models.hpp"
#include "boolift/transforms.hpp"
#include "oracles.hpp"

using namespace boolift;

TEST(Patterns, CountMatchesQuadraticOracle) {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t i = 0; i < (1ull << (1u << n)); ++i) {
      const auto f = oracle::from_index(n, i);
      EXPECT_EQ(pattern_complexity(f), oracle::pattern_count(f));
    }
  std::mt19937_64 rng(21);
  for (int n = 4; n <= 8; ++n)
    for (int t = 0; t < 4; ++t) {
      const auto f = oracle::random_function(n, rng);
      EXPECT_EQ(pattern_complexity(f), oracle::pattern_count(f));
    }
}

TEST(Patterns, KnownValues) {
  EXPECT_EQ(pattern_complexity(named::addr(2)), 5u);
  EXPECT_EQ(pattern_complexity(named::addr(4)), 23u);
  EXPECT_EQ(pattern_complexity(named::addr(8)), 311u);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(pattern_complexity(named::omb(n)), static_cast<std::size_t>(n + 1));
}

TEST(Patterns, PatternOfUsesSupportOrder) {
  const auto f = named::maj(3);  // support {3, 5, 6, 7}
  const auto p = pattern_of(f, 0b011);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_TRUE(p.test(0));
  EXPECT_FALSE(p.test(1));
  EXPECT_FALSE(p.test(2));
  EXPECT_FALSE(p.test(3));
}

TEST(Patterns, PartnerIsUnionOfSupportSets) {
  const std::vector<std::uint64_t> support = {1, 2, 3, 4, 7};
  const auto ps = partner(support, 1, 2);
  EXPECT_EQ(ps.partners, (std::vector<std::uint64_t>{3}));
  EXPECT_THROW(partner(support, 1, 4), PreconditionError);
  std::mt19937_64 rng(30);
  int pairs = 0;
  for (int t = 0; t < 20; ++t) {
    const auto f = oracle::random_function(5, rng);
    const auto sup = mobius_support(f);
    for (std::size_t i = 0; i < sup.size(); ++i)
      for (std::size_t j = i + 1; j < sup.size(); ++j) {
        const auto p = partner(sup, sup[i], sup[j]);
        const std::uint64_t w = sup[i] | sup[j];
        std::uint64_t u = 0;
        for (auto m : p.partners) u |= m;
        EXPECT_EQ(u, w);
        if (std::binary_search(sup.begin(), sup.end(), w)) {
          EXPECT_EQ(p.partners, (std::vector<std::uint64_t>{w}));
        } else {
          ASSERT_EQ(p.partners.size(), 2u);
          EXPECT_NE(p.partners, (std::vector<std::uint64_t>{sup[i], sup[j]}));
          ++pairs;
        }
      }
  }
  EXPECT_GT(pairs, 0);
}

TEST(Patterns, GrowthTraceBounds) {
  std::mt19937_64 rng(4);
  for (int n = 3; n <= 9; ++n) {
    const auto f = oracle::random_function(n, rng);
    const auto t = pattern_growth_trace(f);
    EXPECT_TRUE(t.all_ok());
    EXPECT_EQ(t.pattern_complexity, pattern_complexity(f));
    EXPECT_EQ(t.sparsity, mobius_sparsity(f));
    EXPECT_EQ(t.steps.back().partial_pattern_count, t.pattern_complexity);
  }
}

TEST(Patterns, CubeWithinPow6) {
  EXPECT_TRUE(cube_within_pow6(6, 3));
  EXPECT_FALSE(cube_within_pow6(7, 3));
  EXPECT_TRUE(cube_within_pow6(12, 3, 8));
  EXPECT_FALSE(cube_within_pow6(13, 3, 8));
  EXPECT_TRUE(cube_within_pow6(1, 0));
}

TEST(Queries, NaadtMatchesBruteForce) {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t i = 0; i < (1ull << (1u << n)); ++i) {
      const auto f = oracle::from_index(n, i);
      const auto q = naadt_exact(f);
      EXPECT_EQ(q.k, oracle::query_complexity(f, false)) << serialize_function(f);
      EXPECT_TRUE(and_family_determines(f, q.basis));
      EXPECT_EQ(static_cast<int>(q.basis.size()), q.k);
    }
}

TEST(Queries, NapdtMatchesBruteForce) {
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t i = 0; i < (1ull << (1u << n)); ++i) {
      const auto f = oracle::from_index(n, i);
      const auto q = napdt_exact(f);
      EXPECT_EQ(q.k, oracle::query_complexity(f, true)) << serialize_function(f);
      EXPECT_TRUE(parity_family_determines(f, q.basis));
    }
}

TEST(Queries, KnownValues) {
  Limits six;
  six.max_exact_query_arity = 6;
  EXPECT_EQ(naadt_exact(named::addr(4), {}, six).k, 6);
  EXPECT_EQ(napdt_exact(named::addr(4), {}, six).k, 6);
  EXPECT_EQ(naadt_exact(named::and_fn(5)).k, 1);
  EXPECT_EQ(napdt_exact(named::xor_fn(5)).k, 1);
  EXPECT_EQ(naadt_exact(named::or_fn(4)).k, 4);
  for (int n = 1; n <= 5; ++n) EXPECT_EQ(naadt_exact(named::omb(n)).k, n);
}

TEST(Queries, PrunedPoolAgreesWithUnrestricted) {
  std::mt19937_64 rng(8);
  QueryOptions all;
  all.unrestricted = true;
  all.start_at_lower_bound = false;
  for (int t = 0; t < 200; ++t) {
    const auto f = oracle::random_function(4, rng);
    EXPECT_EQ(naadt_exact(f).k, naadt_exact(f, all).k);
  }
}

TEST(Queries, NonadaptiveDt) {
  const auto f = BooleanFunction::from_predicate(4, [](std::uint64_t x) { return ((x >> 1) ^ (x >> 3)) & 1u; });
  const auto d = nonadaptive_dt(f);
  EXPECT_EQ(d.k, 2);
  EXPECT_EQ(d.variables, 0b1010u);
  EXPECT_EQ(nonadaptive_dt(named::omb_prime(4)).k, 3);
  EXPECT_EQ(nonadaptive_dt(BooleanFunction::constant(3, true)).k, 0);
}

TEST(Queries, AlternatingNumber) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(alternating_number(named::omb(n)), n);
  EXPECT_EQ(alternating_number(named::xor_fn(6)), 6);
  EXPECT_EQ(alternating_number(named::and_fn(6)), 1);
  EXPECT_EQ(alternating_number(BooleanFunction::constant(4, false)), 0);
}

TEST(Queries, NaadtRejectsLargeArity) { EXPECT_THROW(naadt_exact(named::omb(9)), CapExceeded); }

TEST(Separating, FamilyPassesAndIsDeterministic) {
  const auto a = separating_family(10, 2, std::nullopt, 3);
  const auto b = separating_family(10, 2, std::nullopt, 3);
  EXPECT_EQ(a.family, b.family);
  EXPECT_TRUE(separating_check(a.family, 10, 2).ok);
  EXPECT_LE(a.family.size(), default_separating_size(10, 2));
  for (auto s : a.family.sets) EXPECT_NE(s, 0u);
}

TEST(Separating, CheckFindsFailingTuple) {
  SetFamily fam{4, {0b0011, 0b1100}};
  const auto r = separating_check(fam, 4, 1);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.tuple, (std::vector<int>{1, 2}));
  EXPECT_EQ(r.designated, 1);
}

TEST(Separating, DefaultSize) {
  // ceil(24 e log2(C(n,k))^2)
  EXPECT_EQ(default_separating_size(8, 1), 588u);
  EXPECT_EQ(default_separating_size(16, 3), 5438u);
}

TEST(SymmetricNaadt, PlansAgreeWithFunction) {
  for (int n : {6, 9}) {
    for (const auto& f : {named::maj(n), named::thr(n - 1, n), named::and_fn(n)}) {
      if (2 * switch_value(f) >= n) continue;
      const auto plan = symmetric_naadt(f, 1);
      for (std::uint64_t x = 0; x < f.input_count(); ++x) ASSERT_EQ(symmetric_naadt_eval(plan, x), f(x));
    }
  }
}

TEST(SymmetricNaadt, LargeSwitchHasNoSmallPlan) {
  EXPECT_THROW(symmetric_naadt(named::maj(8)), NoSmallPlan);
  EXPECT_THROW(symmetric_naadt(named::or_fn(6)), NoSmallPlan);
  EXPECT_THROW(symmetric_naadt(named::addr(2)), PreconditionError);
}

TEST(SymmetricNaadt, SwitchZeroQueriesEverything) {
  const auto plan = symmetric_naadt(named::and_fn(7));
  ASSERT_EQ(plan.family.size(), 1u);
  EXPECT_EQ(plan.family.sets[0], 0x7fu);
}
