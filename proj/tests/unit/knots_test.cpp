#include "knotgraph/knots.hpp"
#include "knotgraph/parse.hpp"
#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace knotgraph;

TEST(GeneratorKnot, TorusNormalisation) {
  EXPECT_EQ(GeneratorKnot::torus(9, 2), GeneratorKnot::torus(2, 9));
  EXPECT_EQ(GeneratorKnot::torus(-2, 3), GeneratorKnot::torus(2, 3).mirror());
  EXPECT_EQ(GeneratorKnot::torus(-2, -3), GeneratorKnot::torus(2, 3));
  EXPECT_EQ(GeneratorKnot::torus(5, 6).to_string(), "T(5,6)");
  EXPECT_EQ(GeneratorKnot::torus(2, 3).mirror().reverse().to_string(), "r(m(T(2,3)))");
  EXPECT_THROW(GeneratorKnot::torus(2, 4), std::invalid_argument);
  EXPECT_THROW(GeneratorKnot::torus(1, 5), std::invalid_argument);
}

TEST(FormalKnot, SumsAndCancellation) {
  FormalKnot a = FormalKnot::torus(2, 9, 2) + FormalKnot::torus(2, 15);
  EXPECT_EQ(a.to_string(), "2*T(2,9) + T(2,15)");
  EXPECT_EQ(a.summand_count(), 3u);
  FormalKnot b = FormalKnot::torus(2, 9) + FormalKnot::named("6_1");
  EXPECT_EQ(common_part(a, b), FormalKnot::torus(2, 9));
  EXPECT_EQ(remove_summands(a, b), FormalKnot::torus(2, 9) + FormalKnot::torus(2, 15));
  EXPECT_TRUE(FormalKnot::unknot().is_unknot());
  EXPECT_EQ(FormalKnot::unknot().to_string(), "U");
  EXPECT_EQ(repeat(b, 0), FormalKnot::unknot());
}

TEST(Invariants, TorusKnots) {
  FormalKnot t = FormalKnot::torus(2, 9);
  EXPECT_EQ(tau(t), 4);
  EXPECT_EQ(s_half(t), 4);
  EXPECT_EQ(tau(mirror(t)), -4);
  EXPECT_EQ(s_half(reverse_mirror(t)), -4);
  EXPECT_EQ(g4_interval(t), (InvariantInterval{4, 4}));
  EXPECT_EQ(u_interval(t), (InvariantInterval{4, 4}));
  EXPECT_EQ(gamma4_interval(t), (InvariantInterval{1, 1}));
  EXPECT_EQ(gamma4_interval(FormalKnot::torus(5, 6)), (InvariantInterval{2, 2}));
  EXPECT_EQ(gamma4_interval(FormalKnot::torus(3, 5)), (InvariantInterval{1, 9}));
  EXPECT_EQ(tau(FormalKnot::torus(3, 4)), 3);
}

TEST(Invariants, NamedKnots) {
  FormalKnot s = FormalKnot::named("6_1"), w = FormalKnot::named("Wh");
  EXPECT_EQ(tau(s), 0);
  EXPECT_EQ(u_interval(s), (InvariantInterval{1, 1}));
  EXPECT_EQ(g4_interval(s), (InvariantInterval{0, 0}));
  EXPECT_EQ(branched_cover_homology(s, 2), FiniteAbelianGroup::cyclic(9));
  EXPECT_EQ(tau(w), 0);
  EXPECT_EQ(s_half(w), 1);
  EXPECT_EQ(s_half(mirror(w)), -1);
  EXPECT_EQ(g4_interval(w), (InvariantInterval{1, 1}));
  EXPECT_THROW(branched_cover_homology(w, 2), UnsupportedCoverError);
  EXPECT_FALSE(try_e(w, 2).has_value());
  EXPECT_THROW(tau(FormalKnot::named("8_20")), UnknownKnotError);
}

TEST(Invariants, AdditivityAndMirrorNegation) {
  gen::Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    FormalKnot a = gen::knot(rng), b = gen::knot(rng);
    EXPECT_EQ(tau(a + b), tau(a) + tau(b));
    EXPECT_EQ(s_half(a + b), s_half(a) + s_half(b));
    EXPECT_EQ(tau(mirror(a)), -tau(a));
    EXPECT_EQ(s_half(reverse_mirror(a)), -s_half(a));
    EXPECT_EQ(tau(a + reverse_mirror(a)), 0);
    for (auto iv : {g4_interval(a), u_interval(a), gamma4_interval(a)}) EXPECT_LE(iv.lower, iv.upper) << a.to_string();
    EXPECT_LE(g4_interval(a).lower, u_interval(a).upper);
  }
}

TEST(Covers, DirectSumOverSummandsAndMirrorIndependence) {
  FormalKnot k = FormalKnot::torus(2, 9, 2) + FormalKnot::torus(2, 15);
  EXPECT_EQ(branched_cover_homology(k, 2), FiniteAbelianGroup(0, {9, 9, 15}));
  EXPECT_EQ(e(k, 2), 3u);
  EXPECT_EQ(e_mod_p(k, 2, 5), 1u);
  EXPECT_EQ(e_mod_p(k, 2, 3), 3u);
  EXPECT_EQ(branched_cover_homology(mirror(k), 9), branched_cover_homology(k, 9));
  EXPECT_EQ(e(FormalKnot::torus(2, 9, 3), 9), 24u);
  EXPECT_THROW(branched_cover_homology(k, 1), std::invalid_argument);
}

TEST(Parse, Examples) {
  EXPECT_EQ(parse_knot("2*T(2,9) + T(2,15)"), FormalKnot::torus(2, 9, 2) + FormalKnot::torus(2, 15));
  EXPECT_EQ(parse_knot("U"), FormalKnot::unknot());
  EXPECT_EQ(parse_knot("m(T(2,3)) + 6_1"), FormalKnot::torus(-2, 3) + FormalKnot::named("6_1"));
  EXPECT_EQ(parse_knot("3_1"), FormalKnot::torus(2, 3));
  EXPECT_EQ(parse_knot(" T( 3 , -4 ) "), FormalKnot::torus(-3, 4));
  EXPECT_EQ(parse_knot("r(m(Wh))"), reverse_mirror(FormalKnot::named("Wh")));
  EXPECT_EQ(parse_knot("2*6_1"), FormalKnot::named("6_1", 2));
  EXPECT_EQ(parse_knot("U + T(2,5)"), FormalKnot::torus(2, 5));
}

TEST(Parse, ErrorsCarryOffsetAndExpectation) {
  auto offset_of = [](const char* text) {
    try {
      parse_knot(text);
    } catch (const KnotParseError& e) {
      return e.offset();
    }
    return std::size_t(-1);
  };
  EXPECT_EQ(offset_of("T(2,9"), 5u);
  EXPECT_EQ(offset_of("T(2,9) +"), 8u);
  EXPECT_EQ(offset_of("2 T(2,3)"), 2u);
  EXPECT_EQ(offset_of("T(2,4)"), 0u);
  EXPECT_EQ(offset_of("8_20"), 0u);
  EXPECT_EQ(offset_of("0*U"), 0u);
  EXPECT_EQ(offset_of("T(2,3) $"), 7u);
  try {
    parse_knot("T(2 9)");
    FAIL();
  } catch (const KnotParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
    EXPECT_EQ(e.expected(), std::vector<std::string>{"','"});
  }
}

TEST(Parse, PrintThenParseIsIdentity) {
  gen::Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    FormalKnot k = gen::knot(rng);
    EXPECT_EQ(parse_knot(k.to_string()), k) << k.to_string();
  }
}

TEST(Atlas, ExtensionFile) {
  std::istringstream in(
      "# name tau s_half u g4 covers\n"
      "K8 1 1 2 1 cover:m=2:Z_15\n"
      "Slice 0 0 2 0\n");
  KnotAtlas atlas = KnotAtlas::load_extension(in);
  const auto& k8 = atlas.at("K8");
  EXPECT_EQ(k8.g4, (InvariantInterval{1, 1}));
  EXPECT_EQ(k8.u, (InvariantInterval{1, 2}));
  EXPECT_EQ(parse_knot("K8 + Wh", atlas), FormalKnot::named("K8") + FormalKnot::named("Wh"));
  EXPECT_EQ(branched_cover_homology(FormalKnot::named("K8"), 2, atlas), FiniteAbelianGroup::cyclic(15));
  EXPECT_EQ(atlas.at("Slice").gamma4, (InvariantInterval{0, 0}));
  EXPECT_THROW(parse_knot("K8"), KnotParseError);

  for (const char* bad : {"U 0 0 1 1\n", "K 1 1 0 1\n", "K 2 1 3 1\n", "K 1 1 1 1 cover:m=1:Z_3\n", "6_1 0 0 1 0\n",
                          "K 1/2 0 1 1\n", "K 1 1\n"}) {
    std::istringstream bad_in(bad);
    EXPECT_THROW(KnotAtlas::load_extension(bad_in), std::invalid_argument) << bad;
  }
}
