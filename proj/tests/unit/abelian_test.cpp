#include "knotgraph/abelian.hpp"
#include "oracles/group_oracle.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace knotgraph;

TEST(Factorize, SmallAndLarge) {
  EXPECT_EQ(factorize(1).size(), 0u);
  auto f = factorize(360);
  EXPECT_EQ(f.at(2), 3u);
  EXPECT_EQ(f.at(3), 2u);
  EXPECT_EQ(f.at(5), 1u);
  // Product of two primes above the trial-division range.
  Integer p("1000000007"), q("998244353");
  auto g = factorize(p * q * 4);
  EXPECT_EQ(g.at(p), 1u);
  EXPECT_EQ(g.at(q), 1u);
  EXPECT_EQ(g.at(2), 2u);
  EXPECT_THROW(factorize(0), std::invalid_argument);
}

TEST(Factorize, ProductOfPrimePowersRecoversInput) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Integer n = 1;
    for (int i = 0; i < 4; ++i) n *= Integer(gen::uniform(rng, 1, 100000));
    Integer back = 1;
    for (const auto& [p, e] : factorize(n)) {
      EXPECT_TRUE(is_prime(p)) << p;
      back *= boost::multiprecision::pow(p, e);
    }
    EXPECT_EQ(back, n);
  }
}

TEST(FiniteAbelianGroup, NormalFormAndPrinting) {
  EXPECT_EQ(FiniteAbelianGroup::trivial().to_string(), "0");
  EXPECT_EQ(FiniteAbelianGroup::free(1).to_string(), "Z");
  EXPECT_EQ(FiniteAbelianGroup(2, {3, 3, 5}).to_string(), "Z^2 + (Z_3)^2 + Z_5");
  // Z_6 = Z_2 + Z_3.
  EXPECT_EQ(FiniteAbelianGroup(0, {6}), FiniteAbelianGroup(0, {2, 3}));
  EXPECT_EQ(FiniteAbelianGroup(0, {1, 1}), FiniteAbelianGroup::trivial());
  EXPECT_THROW(FiniteAbelianGroup(0, {0}), std::invalid_argument);
}

TEST(FiniteAbelianGroup, InvariantFactorsDivideEachOther) {
  auto f = FiniteAbelianGroup(0, {4, 6, 9}).invariant_factors();
  // Z_4 + Z_6 + Z_9 = Z_6 + Z_36.
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0], 6);
  EXPECT_EQ(f[1], 36);
  gen::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Integer> orders;
    for (int i = gen::uniform(rng, 0, 5); i > 0; --i) orders.push_back(gen::uniform(rng, 1, 200));
    FiniteAbelianGroup g(0, orders);
    auto inv = g.invariant_factors();
    Integer product = 1;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      EXPECT_GT(inv[i], 1);
      if (i + 1 < inv.size()) {
        EXPECT_EQ(inv[i + 1] % inv[i], 0);
      }
      product *= inv[i];
    }
    EXPECT_EQ(product, g.torsion_order());
    EXPECT_EQ(FiniteAbelianGroup(0, inv), g);
    EXPECT_EQ(min_generators(g), inv.size());
  }
}

TEST(FiniteAbelianGroup, DirectSumIsCommutativeAndRepeatAdds) {
  gen::Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto random_group = [&] {
      std::vector<Integer> orders;
      for (int i = gen::uniform(rng, 0, 3); i > 0; --i) orders.push_back(gen::uniform(rng, 1, 50));
      return FiniteAbelianGroup(static_cast<std::uint64_t>(gen::uniform(rng, 0, 2)), orders);
    };
    auto a = random_group(), b = random_group();
    EXPECT_EQ(direct_sum(a, b), direct_sum(b, a));
    EXPECT_EQ(repeat(a, 3), direct_sum(a, direct_sum(a, a)));
    EXPECT_EQ(repeat(a, 0), FiniteAbelianGroup::trivial());
  }
}

TEST(MinGenerators, Examples) {
  EXPECT_EQ(min_generators(FiniteAbelianGroup::trivial()), 0u);
  EXPECT_EQ(min_generators(FiniteAbelianGroup(0, {9})), 1u);
  EXPECT_EQ(min_generators(FiniteAbelianGroup(0, {2, 3})), 1u);
  EXPECT_EQ(min_generators(FiniteAbelianGroup(0, {3, 9, 5})), 2u);
  EXPECT_EQ(min_generators(FiniteAbelianGroup(2, {2, 2, 2})), 5u);
}

TEST(MinGenerators, MatchesSubgroupSearch) {
  // Every product of cyclic groups of order <= 512 built from a small grid.
  std::vector<std::vector<std::uint32_t>> shapes;
  for (std::uint32_t a : {1u, 2u, 3u, 4u, 6u, 8u, 9u, 12u})
    for (std::uint32_t b : {1u, 2u, 3u, 4u, 6u})
      for (std::uint32_t c : {1u, 2u, 3u, 5u})
        if (a * b * c <= 512) shapes.push_back({a, b, c});
  for (const auto& s : shapes) {
    FiniteAbelianGroup g(0, {s[0], s[1], s[2]});
    EXPECT_EQ(min_generators(g), oracle::ProductGroup(s).min_generators()) << g.to_string();
  }
}

TEST(ModPDimension, CountsPrimarySummandsAndFreeRank) {
  FiniteAbelianGroup g(1, {9, 3, 5, 25});
  EXPECT_EQ(mod_p_dimension(g, 3), 3u);
  EXPECT_EQ(mod_p_dimension(g, 5), 3u);
  EXPECT_EQ(mod_p_dimension(g, 7), 1u);
  EXPECT_THROW(mod_p_dimension(g, 9), std::invalid_argument);
}

TEST(ParseGroup, AcceptsTextFormAndRoundTrips) {
  EXPECT_EQ(parse_group("0"), FiniteAbelianGroup::trivial());
  EXPECT_EQ(parse_group("Z_9"), FiniteAbelianGroup(0, {9}));
  EXPECT_EQ(parse_group("Z^2 + (Z_3)^2 + Z_5"), FiniteAbelianGroup(2, {3, 3, 5}));
  EXPECT_EQ(parse_group("Z + Z"), FiniteAbelianGroup::free(2));
  for (const char* bad : {"", "Z_", "Q", "(Z_3)^", "Z_3 +", "(Z_3^2"})
    EXPECT_THROW(parse_group(bad), std::invalid_argument) << bad;
  gen::Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Integer> orders;
    for (int i = gen::uniform(rng, 0, 4); i > 0; --i) orders.push_back(gen::uniform(rng, 1, 100));
    FiniteAbelianGroup g(static_cast<std::uint64_t>(gen::uniform(rng, 0, 3)), orders);
    EXPECT_EQ(parse_group(g.to_string()), g);
  }
}

TEST(Numeric, RationalHelpers) {
  EXPECT_EQ(to_string(Rational(6, 8)), "3/4");
  EXPECT_EQ(to_string(Rational(3)), "3");
  EXPECT_EQ(ceil(Rational(3, 4)), 1);
  EXPECT_EQ(ceil(Rational(-3, 4)), 0);
  EXPECT_EQ(floor(Rational(-3, 4)), -1);
  EXPECT_EQ(parse_rational("-7/14"), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}
