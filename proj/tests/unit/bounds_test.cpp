#include "knotgraph/bounds.hpp"
#include "knotgraph/parse.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace knotgraph;

namespace {

FormalKnot t9(std::uint64_t c) { return FormalKnot::torus(2, 9, c); }
FormalKnot t15(std::uint64_t c) { return FormalKnot::torus(2, 15, c); }
FormalKnot wh(std::uint64_t c) { return FormalKnot::named("Wh", c); }

// e_m of #^a T(2,9) # #^b T(2,15), summed from the summands' cover groups.
std::uint64_t e_sum(std::uint64_t a, std::uint64_t b, int m) {
  return min_generators(direct_sum(repeat(homology(BrieskornWeights(2, 9, m)), a),
                                   repeat(homology(BrieskornWeights(2, 15, m)), b)));
}

}  // namespace

TEST(HntLower, Examples) {
  EXPECT_EQ(hnt_lower(FormalKnot::unknot(), t9(6), 2, 2), 6);
  for (std::uint64_t k = 1; k <= 6; ++k)
    for (std::uint64_t i = 0; i <= 2 * k; ++i)
      EXPECT_EQ(hnt_lower(t9(k) + t15(k), t9(2 * k) + t15(i), 2, 9), Rational(6 * k + 2 * i, 8));
  FormalKnot k = t9(2) + FormalKnot::named("6_1");
  for (unsigned n = 2; n <= 5; ++n) EXPECT_EQ(hnt_lower(k, k, n, 2), 0);
  EXPECT_THROW(hnt_lower(wh(1), FormalKnot::unknot(), 2, 2), UnsupportedCoverError);
  EXPECT_THROW(hnt_lower(t9(1), t9(2), 1, 2), std::invalid_argument);
}

TEST(HntLower, MatchesSummandwiseCoverCounts) {
  for (std::uint64_t a = 0; a <= 6; ++a)
    for (std::uint64_t b = 0; b <= 6; ++b)
      for (int m : {2, 3, 5, 9}) {
        Rational expect(abs(Integer(Integer(e_sum(a, b, m)) - Integer(e_sum(b, a, m)))), Integer(m - 1));
        EXPECT_EQ(hnt_lower(t9(a) + t15(b), t9(b) + t15(a), 2, m), expect);
      }
}

TEST(HntLower, SymmetricAndTriangleForOneDegree) {
  gen::Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    FormalKnot a = gen::knot(rng, 3, false), b = gen::knot(rng, 3, false), c = gen::knot(rng, 3, false);
    for (std::uint64_t m : {2, 3, 5}) {
      EXPECT_EQ(hnt_lower(a, b, 2, m), hnt_lower(b, a, 2, m));
      EXPECT_LE(hnt_lower(a, c, 3, m), hnt_lower(a, b, 3, m) + hnt_lower(b, c, 3, m));
    }
  }
}

TEST(AkLower, Examples) {
  for (std::uint64_t k = 1; k <= 5; ++k)
    for (std::uint64_t i = 0; i <= 2 * k; ++i) EXPECT_EQ(ak_lower_d2_mod(t9(k) + t15(k), t9(i), 5), k);
  for (std::uint64_t m = 0; m <= 8; ++m) EXPECT_EQ(ak_lower_d2(FormalKnot::unknot(), t9(m)), m);
  EXPECT_EQ(ak_lower_d2(t9(3), t9(3)), 0);
}

TEST(ConcordanceLower, Examples) {
  FormalKnot mt = FormalKnot::torus(-2, 3);
  for (std::uint64_t k = 1; k <= 6; ++k) {
    EXPECT_EQ(concordance_lower(FormalKnot::unknot(), wh(k)), k);
    for (std::uint64_t m = 0; m <= 6; ++m) EXPECT_GE(concordance_lower(repeat(mt, k), wh(m)), k);
  }
  FormalKnot x = FormalKnot::named("6_1") + t9(2);
  EXPECT_EQ(concordance_lower(x, x), 0);
}

TEST(DistanceBound, InvariantsEnforced) {
  DistanceBound b;
  EXPECT_EQ(b.lower_integer(), 0);
  EXPECT_TRUE(b.raise_lower(Rational(9, 4), {"x", {}}));
  EXPECT_FALSE(b.raise_lower(2, {"y", {}}));
  EXPECT_EQ(b.lower_integer(), 3);
  EXPECT_THROW(b.lower_upper(2, {"z", {}}), std::logic_error);
  EXPECT_TRUE(b.lower_upper(3, {"z", {}}));
  EXPECT_TRUE(b.exact());
  EXPECT_THROW(b.raise_lower(Rational(7, 2), {"w", {}}), std::logic_error);
  EXPECT_EQ(b.provenance().size(), 2u);
  EXPECT_EQ((BoundCertificate{"hnt", {{"m", "9"}, {"n", "2"}}}.to_string()), "hnt: m=9, n=2");
}

TEST(Propagate, LiftFromD2) {
  BoundTable t;
  t[2].raise_lower(9, {"given", {}});
  t[4];
  t = propagate(t);
  // (n-1) d_n >= (2/3) d_2: 3 d_4 >= 6.
  EXPECT_EQ(t[4].lower_rational(), 2);
  EXPECT_EQ(t[4].lower_integer(), 2);
}

TEST(Propagate, MonotoneUpperFlowsUpOnly) {
  BoundTable t;
  t[2];
  t[5].lower_upper(1, {"given", {}});
  t[6];
  t = propagate(t);
  EXPECT_FALSE(t[2].upper().has_value());
  EXPECT_EQ(t[6].upper(), Integer(1));
}

TEST(Propagate, BandsMergeIntoOneMove) {
  // d_2 <= m: the m bands form one H(m+1)-move.
  for (unsigned m = 1; m <= 6; ++m) {
    BoundTable t;
    t[2].lower_upper(m, {"given", {}});
    for (unsigned n = 3; n <= m + 2; ++n) t[n];
    t = propagate(t);
    EXPECT_EQ(t[m + 1].upper(), Integer(1));
    if (m >= 3) {
      EXPECT_EQ(t[m].upper(), Integer(m));
    }
  }
}

TEST(Propagate, TwoTrefoilsStayConsistent) {
  // d_2(#2 T(2,3), U) = 2 and one H(3)-move unknots it.
  FormalKnot k = FormalKnot::torus(2, 3, 2);
  BoundTable t = distance_table(k, FormalKnot::unknot(), MoveKind::hn(3));
  EXPECT_TRUE(t.at(2).exact());
  EXPECT_EQ(*t.at(2).upper(), 2);
  EXPECT_TRUE(t.at(3).exact());
  EXPECT_EQ(*t.at(3).upper(), 1);
}

TEST(Propagate, IdempotentAndSoundOnRandomTables) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    BoundTable t = gen::bound_table(rng);
    BoundTable once = propagate(t);
    BoundTable twice = propagate(once);
    for (const auto& [n, b] : once) {
      EXPECT_EQ(b.lower_rational(), twice.at(n).lower_rational());
      EXPECT_EQ(b.upper(), twice.at(n).upper());
      EXPECT_EQ(b.provenance().size(), twice.at(n).provenance().size());
      if (b.upper()) {
        EXPECT_LE(b.lower_integer(), *b.upper());
      }
    }
  }
}

TEST(Propagate, RejectsKeysBelowTwo) {
  BoundTable t;
  t[1];
  EXPECT_THROW(propagate(t), std::invalid_argument);
}

TEST(QuasiIsometry, Constants) {
  EXPECT_EQ(quasi_isometry_constants(3).a, 3);
  EXPECT_EQ(quasi_isometry_constants(4).a, Rational(9, 2));
  EXPECT_EQ(quasi_isometry_constants(4).b, 0);
  EXPECT_FALSE(quasi_isometry_constants(5).derivation.empty());
  EXPECT_THROW(quasi_isometry_constants(2), std::invalid_argument);
}

TEST(QuasiIsometry, DoubleInequalityOnWitnessPairs) {
  // Evaluate d_2/a - b <= d_n <= d_2 on certified intervals: the lower bound
  // of d_n against the upper of d_2, and the upper of d_n against the lower.
  for (unsigned n = 3; n <= 5; ++n) {
    auto q = quasi_isometry_constants(n);
    for (std::uint64_t k = 1; k <= 3; ++k) {
      FormalKnot u = FormalKnot::unknot(), k1 = t9(2 * k * (n - 1)), k2 = k1 + t15(2 * k * (n - 1));
      const std::vector<std::pair<FormalKnot, FormalKnot>> pairs{{u, k1}, {k1, k2}, {u, k2}};
      for (const auto& [x, y] : pairs) {
        BoundTable t = distance_table(x, y, MoveKind::hn(n));
        ASSERT_TRUE(t.at(2).upper() && t.at(n).upper());
        EXPECT_LE(Rational(t.at(2).lower_integer()) / q.a - q.b, Rational(*t.at(n).upper()));
        EXPECT_LE(t.at(n).lower_rational(), Rational(*t.at(2).upper()));
      }
    }
  }
}

TEST(UpperFromPath, Examples) {
  EXPECT_EQ(upper_from_path({FormalKnot::unknot(), t9(1)}, MoveKind::hn(2)), 1u);
  for (unsigned n = 2; n <= 6; ++n) EXPECT_EQ(upper_from_path({FormalKnot::unknot(), t9(n - 1)}, MoveKind::hn(n)), 1u);
  EXPECT_EQ(upper_from_path({t9(3)}, MoveKind::hn(2)), 0u);
  EXPECT_EQ(upper_from_path({}, MoveKind::hn(2)), 0u);
  EXPECT_THROW(upper_from_path({FormalKnot::unknot(), t9(2)}, MoveKind::hn(2)), PathStepError);
  EXPECT_THROW(upper_from_path({t9(1), t9(1)}, MoveKind::hn(2)), PathStepError);
  try {
    upper_from_path({FormalKnot::unknot(), t9(1), t9(1) + FormalKnot::named("6_1")}, MoveKind::hn(2));
    FAIL();
  } catch (const PathStepError& e) {
    EXPECT_EQ(e.step(), 1u);
  }
}

TEST(Catalog, MoveRules) {
  const auto h2 = MoveKind::hn(2), h3 = MoveKind::hn(3), cc = MoveKind::crossing_change();
  EXPECT_TRUE(match_move(t9(1), FormalKnot::torus(2, 5), h2));
  EXPECT_FALSE(match_move(t9(1), FormalKnot::torus(2, 7), h2));
  EXPECT_TRUE(match_move(t9(1), FormalKnot::torus(2, 7), cc));
  EXPECT_TRUE(match_move(t9(1), FormalKnot::torus(2, 7), h3));
  EXPECT_TRUE(match_move(FormalKnot::torus(5, 6), FormalKnot::torus(3, 4), h2));
  EXPECT_TRUE(match_move(FormalKnot::torus(3, 4), FormalKnot::unknot(), h2));
  EXPECT_FALSE(match_move(FormalKnot::torus(5, 6), FormalKnot::unknot(), h2));
  EXPECT_TRUE(match_move(FormalKnot::named("6_1"), FormalKnot::unknot(), cc));
  EXPECT_FALSE(match_move(FormalKnot::named("6_1"), FormalKnot::unknot(), h2));
  EXPECT_TRUE(match_move(wh(3), wh(2), cc));
  EXPECT_FALSE(match_move(wh(3), wh(1), cc));
  // Mixed decorations are not one twist family.
  EXPECT_FALSE(match_move(t9(1), FormalKnot::torus(-2, 7), cc));
  EXPECT_TRUE(match_move(FormalKnot::torus(-2, 9), FormalKnot::torus(-2, 7), cc));
}

TEST(Catalog, PathsAreCertifiedAndNoShorterThanLowerBounds) {
  gen::Rng rng(37);
  const std::vector<MoveKind> kinds{MoveKind::hn(2), MoveKind::hn(3), MoveKind::hn(5), MoveKind::crossing_change()};
  for (int trial = 0; trial < 150; ++trial) {
    FormalKnot a = gen::knot(rng, 3, false), b = gen::knot(rng, 3, false);
    for (const auto& kind : kinds) {
      auto path = catalog_path(a, b, kind);
      if (!path) continue;
      ASSERT_EQ(path->front(), a);
      ASSERT_EQ(path->back(), b);
      std::uint64_t len = upper_from_path(*path, kind);
      if (kind.is_band())
        EXPECT_LE(hn_lower_bound(a, b, kind.n).lower_integer(), len);
      else
        EXPECT_LE(concordance_lower(a, b), len);
    }
  }
}

TEST(DistanceTable, ParsedPair) {
  BoundTable t = distance_table(parse_knot("U"), parse_knot("6*T(2,9)"), MoveKind::hn(4));
  EXPECT_TRUE(t.at(2).exact());
  EXPECT_EQ(*t.at(2).upper(), 6);
  EXPECT_EQ(*t.at(4).upper(), 2);
  EXPECT_TRUE(t.at(4).exact());
  BoundTable c = distance_table(FormalKnot::unknot(), wh(3), MoveKind::crossing_change());
  EXPECT_TRUE(c.at(0).exact());
  EXPECT_EQ(*c.at(0).upper(), 3);
}
