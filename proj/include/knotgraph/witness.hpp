#pragma once

#include "knotgraph/bounds.hpp"
#include "knotgraph/knots.hpp"
#include "knotgraph/metricgraph.hpp"
#include "knotgraph/moves.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotgraph {

enum class WitnessFamily { h2, hn, concordance };

inline std::string to_string(WitnessFamily f) {
  switch (f) {
    case WitnessFamily::h2: return "h2";
    case WitnessFamily::hn: return "hn";
    case WitnessFamily::concordance: return "cc";
  }
  return "?";
}

/// Which knot plays K_{1,1} in the concordance triangle.
enum class TrefoilVariant { trefoil, mirror_trefoil };

inline std::string to_string(TrefoilVariant v) { return v == TrefoilVariant::trefoil ? "trefoil" : "mirror-trefoil"; }

class WitnessVerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A geodesic triangle candidate: side 1 runs U -> K1, side 2 runs K1 -> K2,
/// side 3 runs U -> K2 and carries the midpoint.
struct TriangleWitness {
  WitnessFamily family = WitnessFamily::h2;
  unsigned n = 2;  // H(n) parameter; unused for the concordance family
  std::uint64_t k = 1;
  TrefoilVariant k11 = TrefoilVariant::trefoil;
  std::array<std::vector<FormalKnot>, 3> sides;
  std::size_t midpoint_index = 0;  // position of the midpoint on side 3

  const FormalKnot& midpoint() const { return sides[2].at(midpoint_index); }

  MoveKind move_kind() const {
    return family == WitnessFamily::concordance ? MoveKind::crossing_change() : MoveKind::hn(n);
  }

  /// Sides oriented head to tail (side 3 reversed), as triangle_thinness expects.
  std::array<std::vector<FormalKnot>, 3> cyclic_sides() const {
    auto out = sides;
    std::reverse(out[2].begin(), out[2].end());
    return out;
  }
};

namespace detail {

// Triangle over two summands A and B with blocks of `block` copies per step:
// U -> m A,  m A -> m A + m B,  and U -> m A + m B alternating B then A.
inline TriangleWitness grid_triangle(const FormalKnot& a, const FormalKnot& b, std::uint64_t m, std::uint64_t block) {
  TriangleWitness w;
  auto at = [&](std::uint64_t i, std::uint64_t j) { return repeat(a, i * block) + repeat(b, j * block); };
  for (std::uint64_t i = 0; i <= m; ++i) w.sides[0].push_back(at(i, 0));
  for (std::uint64_t i = 0; i <= m; ++i) w.sides[1].push_back(at(m, i));
  w.sides[2].push_back(at(0, 0));
  for (std::uint64_t i = 0; i < m; ++i) {
    w.sides[2].push_back(at(i, i + 1));
    w.sides[2].push_back(at(i + 1, i + 1));
  }
  w.midpoint_index = m;  // at(m/2, m/2)
  return w;
}

}  // namespace detail

/// The H(2) triangle with m = 2k: K1 = #^m T(2,9), K2 = K1 # (#^m T(2,15)),
/// midpoint K3 = #^k T(2,9) # #^k T(2,15).
inline TriangleWitness build_h2_witness(std::uint64_t k) {
  if (k < 1) throw std::invalid_argument("build_h2_witness: k must be >= 1");
  TriangleWitness w = detail::grid_triangle(FormalKnot::torus(2, 9), FormalKnot::torus(2, 15), 2 * k, 1);
  w.family = WitnessFamily::h2;
  w.n = 2;
  w.k = k;
  return w;
}

/// The H(n) triangle: as the H(2) one with each summand replaced by n-1 copies.
inline TriangleWitness build_hn_witness(unsigned n, std::uint64_t k) {
  if (n < 3) throw std::invalid_argument("build_hn_witness: n must be >= 3");
  if (k < 1) throw std::invalid_argument("build_hn_witness: k must be >= 1");
  TriangleWitness w = detail::grid_triangle(FormalKnot::torus(2, 9), FormalKnot::torus(2, 15), 2 * k, n - 1);
  w.family = WitnessFamily::hn;
  w.n = n;
  w.k = k;
  return w;
}

inline FormalKnot k11_knot(TrefoilVariant v) {
  return v == TrefoilVariant::trefoil ? FormalKnot::torus(2, 3) : FormalKnot::torus(-2, 3);
}

/// The concordance triangle with K01 = Wh: side 1 is U -> #^k Wh, side 2 is
/// #^k Wh -> #^k Wh # #^k K11, side 3 is U -> #^k K11 -> #^k Wh # #^k K11.
inline TriangleWitness build_concordance_witness(std::uint64_t k, TrefoilVariant variant = TrefoilVariant::trefoil) {
  if (k < 1) throw std::invalid_argument("build_concordance_witness: k must be >= 1");
  TriangleWitness w;
  w.family = WitnessFamily::concordance;
  w.n = 0;
  w.k = k;
  w.k11 = variant;
  const FormalKnot wh = FormalKnot::named("Wh"), k11 = k11_knot(variant);
  for (std::uint64_t i = 0; i <= k; ++i) w.sides[0].push_back(repeat(wh, i));
  for (std::uint64_t i = 0; i <= k; ++i) w.sides[1].push_back(repeat(wh, k) + repeat(k11, i));
  for (std::uint64_t i = 0; i <= k; ++i) w.sides[2].push_back(repeat(k11, i));
  for (std::uint64_t j = 1; j <= k; ++j) w.sides[2].push_back(repeat(wh, j) + repeat(k11, k));
  w.midpoint_index = k;
  return w;
}

struct EdgeCertificate {
  std::uint64_t length = 0;
  Rational lower = 0;
  bool catalog_certified = false;
  bool geodesic = false;
  std::string status;
  std::vector<BoundCertificate> provenance;
};

/// Lower bound on d(midpoint, v) for one vertex of an opposite side.
struct PointBound {
  int side;           // 0 or 1
  std::size_t index;  // position on that side
  Rational bound;
  BoundCertificate rule;
};

struct TriangleCertificate {
  WitnessFamily family;
  unsigned n;
  std::uint64_t k;
  TrefoilVariant k11;
  std::array<EdgeCertificate, 3> edges;
  Rational separation;               // lower bound on d(M, side 1 u side 2)
  PointBound closest;                // the vertex attaining it
  std::vector<PointBound> pointwise;  // every vertex of sides 1 and 2
  bool all_geodesic = false;
  /// Concordance lower bounds also bound the crossing-change Gordian distance
  /// from below, so the concordance certificate lifts to the knot graph.
  bool lifts_to_knot_graph = false;
  std::string verdict;
  std::vector<std::string> provenance;
};

namespace detail {

inline void check_well_formed(const TriangleWitness& w) {
  for (const auto& s : w.sides)
    if (s.empty()) throw std::invalid_argument("witness side is empty");
  if (!(w.sides[0].front() == w.sides[2].front()) || !(w.sides[0].back() == w.sides[1].front()) ||
      !(w.sides[1].back() == w.sides[2].back()))
    throw std::invalid_argument("witness sides do not close up into a triangle");
  if (w.midpoint_index >= w.sides[2].size()) throw std::invalid_argument("witness midpoint is off side 3");
}

// Lower bound on the distance between the two ends of a side.
inline DistanceBound edge_lower(const TriangleWitness& w, const FormalKnot& a, const FormalKnot& b,
                                const KnotAtlas& atlas) {
  if (w.family == WitnessFamily::concordance) {
    DistanceBound d;
    d.raise_lower(Rational(concordance_lower(a, b, atlas)), {"concordance", {{"invariants", "tau,s/2"}}});
    return d;
  }
  return hn_lower_bound(a, b, w.n, default_cover_degrees(), atlas);
}

// The per-side separation rules: for H families, side 1 through the degree-5
// cover (the F_5 count for n = 2) and side 2 through the degree-9 cover; for the
// concordance family, the tau/s' bound on both sides.
inline PointBound point_bound(const TriangleWitness& w, int side, std::size_t index, const KnotAtlas& atlas) {
  const FormalKnot& m = w.midpoint();
  const FormalKnot& v = w.sides[side][index];
  if (w.family == WitnessFamily::concordance)
    return {side, index, Rational(concordance_lower(m, v, atlas)), {"concordance", {{"invariants", "tau,s/2"}}}};
  if (side == 0 && w.n == 2)
    return {side, index, Rational(ak_lower_d2_mod(m, v, 5, atlas)), {"mod-p-cover", {{"m", "2"}, {"p", "5"}}}};
  std::uint64_t degree = side == 0 ? 5 : 9;
  return {side, index, hnt_lower(m, v, w.n, degree, atlas),
          {"hnt", {{"m", std::to_string(degree)}, {"n", std::to_string(w.n)}}}};
}

}  // namespace detail

/// Checks every side against the catalog and the invariant lower bounds, and
/// bounds the distance from the midpoint to the two opposite sides.
inline TriangleCertificate certify(const TriangleWitness& w, const KnotAtlas& atlas = KnotAtlas::builtin()) {
  detail::check_well_formed(w);
  TriangleCertificate c{w.family, w.n, w.k, w.k11, {}, 0, {}, {}, false, false, "", {}};
  const MoveKind kind = w.move_kind();
  c.all_geodesic = true;
  for (int i = 0; i < 3; ++i) {
    const auto& side = w.sides[i];
    EdgeCertificate& e = c.edges[i];
    e.length = side.size() - 1;
    DistanceBound lower = detail::edge_lower(w, side.front(), side.back(), atlas);
    e.lower = lower.lower_rational();
    e.provenance = lower.provenance();
    try {
      certify_path(side, kind, atlas);
      e.catalog_certified = true;
    } catch (const PathStepError& err) {
      e.status = std::string("path not catalog-certified: ") + err.what();
    }
    e.geodesic = e.catalog_certified && is_integral(e.lower) && e.lower == Rational(e.length);
    if (e.geodesic)
      e.status = "geodesic";
    else if (e.catalog_certified)
      e.status = "within [" + ceil(e.lower).str() + ", " + std::to_string(e.length) + "], geodesic not certified";
    c.all_geodesic = c.all_geodesic && e.geodesic;
  }

  for (int side = 0; side < 2; ++side)
    for (std::size_t i = 0; i < w.sides[side].size(); ++i) c.pointwise.push_back(detail::point_bound(w, side, i, atlas));
  c.closest = c.pointwise.front();
  for (const auto& p : c.pointwise)
    if (p.bound < c.closest.bound) c.closest = p;
  c.separation = c.closest.bound;

  c.lifts_to_knot_graph = w.family == WitnessFamily::concordance;
  c.verdict = "not delta-thin for any delta < " + to_string(c.separation);
  c.provenance.push_back("midpoint " + w.midpoint().to_string() + " on side 3");
  c.provenance.push_back("separation attained on side " + std::to_string(c.closest.side + 1) + " at " +
                         w.sides[c.closest.side][c.closest.index].to_string() + " via " + c.closest.rule.to_string());
  if (c.lifts_to_knot_graph)
    c.provenance.push_back("concordance bounds are also lower bounds for the crossing-change Gordian distance");
  return c;
}

inline TriangleWitness build_witness(WitnessFamily family, std::uint64_t k, unsigned n = 3,
                                     TrefoilVariant variant = TrefoilVariant::trefoil) {
  switch (family) {
    case WitnessFamily::h2: return build_h2_witness(k);
    case WitnessFamily::hn: return build_hn_witness(n, k);
    case WitnessFamily::concordance: return build_concordance_witness(k, variant);
  }
  throw std::invalid_argument("unknown witness family");
}

/// Least k whose certified separation exceeds delta. The closed form (3k/4 for
/// the H families, ceil(k/2) for the concordance family) is checked by
/// certifying k and k - 1.
inline std::uint64_t schedule_k_for_delta(WitnessFamily family, const Rational& delta, unsigned n = 3,
                                          const KnotAtlas& atlas = KnotAtlas::builtin()) {
  if (delta < 0) throw std::invalid_argument("schedule_k_for_delta: delta must be >= 0");
  Integer k = family == WitnessFamily::concordance ? 2 * floor(delta) + 1 : floor(delta * 4 / 3) + 1;
  std::uint64_t kk = to_u64(k, "k");
  if (!(certify(build_witness(family, kk, n), atlas).separation > delta))
    throw WitnessVerificationError("scheduled k = " + std::to_string(kk) + " does not exceed delta");
  if (kk > 1 && certify(build_witness(family, kk - 1, n), atlas).separation > delta)
    throw WitnessVerificationError("scheduled k = " + std::to_string(kk) + " is not the least");
  return kk;
}

/// psi(L) = L # -K-bar # K': the translation taking [K] to [K'].
inline FormalKnot concordance_translate(const FormalKnot& l, const FormalKnot& k, const FormalKnot& k2) {
  return l + reverse_mirror(k) + k2;
}

/// The distinct knots of a witness with every catalog-adjacent pair joined.
struct WitnessGraph {
  MetricGraph graph;
  std::map<FormalKnot, Vertex> index;
  std::array<VertexPath, 3> cyclic_sides;
  Vertex midpoint = 0;
};

inline WitnessGraph witness_graph(const TriangleWitness& w, const KnotAtlas& atlas = KnotAtlas::builtin()) {
  WitnessGraph out;
  std::vector<FormalKnot> knots;
  for (const auto& side : w.sides)
    for (const auto& k : side)
      if (!out.index.contains(k)) {
        out.index.emplace(k, out.graph.add_vertex(k.to_string()));
        knots.push_back(k);
      }
  for (std::size_t i = 0; i < knots.size(); ++i)
    for (std::size_t j = i + 1; j < knots.size(); ++j)
      if (match_move(knots[i], knots[j], w.move_kind(), atlas))
        out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  auto cyclic = w.cyclic_sides();
  for (int s = 0; s < 3; ++s)
    for (const auto& k : cyclic[s]) out.cyclic_sides[s].push_back(out.index.at(k));
  out.midpoint = out.index.at(w.midpoint());
  return out;
}

enum class QuotientInvariant { g4, u, gamma4, tau, s_half };

inline std::string to_string(QuotientInvariant q) {
  switch (q) {
    case QuotientInvariant::g4: return "g4";
    case QuotientInvariant::u: return "u";
    case QuotientInvariant::gamma4: return "gamma4";
    case QuotientInvariant::tau: return "tau";
    case QuotientInvariant::s_half: return "shalf";
  }
  return "?";
}

/// Exact value of an invariant; throws when only bounds are certified.
inline Integer invariant_value(QuotientInvariant q, const FormalKnot& k, const KnotAtlas& atlas = KnotAtlas::builtin()) {
  auto exact = [&](const InvariantInterval& iv) {
    if (!iv.exact())
      throw std::invalid_argument(to_string(q) + "(" + k.to_string() + ") is only known to lie in " + iv.to_string());
    return iv.lower;
  };
  switch (q) {
    case QuotientInvariant::g4: return exact(g4_interval(k, atlas));
    case QuotientInvariant::u: return exact(u_interval(k, atlas));
    case QuotientInvariant::gamma4: return exact(gamma4_interval(k, atlas));
    case QuotientInvariant::tau: return tau(k, atlas);
    case QuotientInvariant::s_half: return s_half(k, atlas);
  }
  throw std::invalid_argument("unknown invariant");
}

/// Move kind whose quotient graph the invariant identifies with Z or N.
inline MoveKind quotient_move_kind(QuotientInvariant q) {
  return q == QuotientInvariant::gamma4 ? MoveKind::hn(2) : MoveKind::crossing_change();
}

/// Representative knot with invariant value n.
inline FormalKnot quotient_witness(QuotientInvariant q, std::int64_t n) {
  if (n == 0) return FormalKnot::unknot();
  if (q == QuotientInvariant::gamma4) {
    if (n < 0) throw std::invalid_argument("gamma4 classes are non-negative");
    return FormalKnot::torus(2 * n + 1, 2 * n + 2);  // T(2n+2, 2n+1)
  }
  if (n < 0 && q != QuotientInvariant::tau && q != QuotientInvariant::s_half)
    throw std::invalid_argument(to_string(q) + " classes are non-negative");
  std::int64_t m = n < 0 ? -n : n;
  return FormalKnot::torus(n < 0 ? -2 : 2, 2 * m + 1);
}

/// Path graph on invariant classes with certified representatives.
struct QuotientModel {
  QuotientInvariant invariant;
  MoveKind kind;
  std::int64_t lowest;
  std::int64_t highest;
  MetricGraph graph;                 // vertex i is class lowest + i
  std::vector<FormalKnot> witnesses;  // witnesses[i] represents class lowest + i
  std::vector<MoveCatalogEntry> steps;

  Vertex vertex_of(std::int64_t cls) const { return static_cast<Vertex>(cls - lowest); }
};

inline QuotientModel quotient_model(QuotientInvariant q, std::int64_t size,
                                    const KnotAtlas& atlas = KnotAtlas::builtin()) {
  if (size < 1) throw std::invalid_argument("quotient_model: N must be >= 1");
  bool symmetric = q == QuotientInvariant::tau || q == QuotientInvariant::s_half;
  QuotientModel m{q, quotient_move_kind(q), symmetric ? -size : 0, size, {}, {}, {}};
  for (std::int64_t c = m.lowest; c <= m.highest; ++c) {
    FormalKnot k = quotient_witness(q, c);
    Integer value = invariant_value(q, k, atlas);
    if (value != c)
      throw WitnessVerificationError(to_string(q) + "(" + k.to_string() + ") = " + value.str() + ", expected " +
                                     std::to_string(c));
    m.graph.add_vertex(std::to_string(c));
    m.witnesses.push_back(std::move(k));
  }
  for (std::size_t i = 0; i + 1 < m.witnesses.size(); ++i) {
    auto step = match_move(m.witnesses[i], m.witnesses[i + 1], m.kind, atlas);
    if (!step)
      throw WitnessVerificationError("no " + m.kind.to_string() + " move between " + m.witnesses[i].to_string() +
                                     " and " + m.witnesses[i + 1].to_string());
    m.steps.push_back(*step);
    m.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return m;
}

/// K_{m,n} = #^(n-m) 6_1 # #^m 3_1 for 0 <= m <= n <= N, with g4 = m and u = n.
struct TwoInvariantModel {
  std::int64_t size;
  std::vector<std::pair<std::int64_t, std::int64_t>> points;  // (m, n)
  std::vector<FormalKnot> witnesses;
  /// Certified single crossing changes: add a 6_1 (n + 1) or a 3_1 (m + 1, n + 1).
  MetricGraph lattice;
  /// bounds[i][j] for i < j: lower from the invariants, upper from the
  /// bi-Lipschitz estimate.
  std::vector<std::vector<DistanceBound>> bounds;

  std::size_t index_of(std::int64_t m, std::int64_t n) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i] == std::pair{m, n}) return i;
    throw std::out_of_range("lattice point outside the model");
  }
  /// Upper bound from catalog paths in the lattice.
  std::uint32_t catalog_upper(std::size_t i, std::size_t j) const {
    return lattice.distances()(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
};

inline FormalKnot two_invariant_witness(std::int64_t m, std::int64_t n) {
  if (m < 0 || m > n) throw std::invalid_argument("two-invariant witnesses need 0 <= m <= n");
  return FormalKnot::named("6_1", static_cast<std::uint64_t>(n - m)) + FormalKnot::torus(2, 3, static_cast<std::uint64_t>(m));
}

inline TwoInvariantModel quotient_two_invariant_model(std::int64_t size, const KnotAtlas& atlas = KnotAtlas::builtin()) {
  if (size < 1) throw std::invalid_argument("quotient_two_invariant_model: N must be >= 1");
  TwoInvariantModel model{size, {}, {}, {}, {}};
  for (std::int64_t n = 0; n <= size; ++n)
    for (std::int64_t m = 0; m <= n; ++m) {
      FormalKnot k = two_invariant_witness(m, n);
      Integer g4 = invariant_value(QuotientInvariant::g4, k, atlas);
      Integer u = invariant_value(QuotientInvariant::u, k, atlas);
      if (g4 != m || u != n)
        throw WitnessVerificationError(k.to_string() + " has (g4, u) = (" + g4.str() + ", " + u.str() + ")");
      model.points.emplace_back(m, n);
      model.witnesses.push_back(std::move(k));
      model.lattice.add_vertex("(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
  const MoveKind cc = MoveKind::crossing_change();
  for (std::size_t i = 0; i < model.points.size(); ++i) {
    auto [m, n] = model.points[i];
    for (auto [dm, dn] : {std::pair<std::int64_t, std::int64_t>{0, 1}, {1, 1}}) {
      if (m + dm > n + dn || n + dn > size) continue;
      std::size_t j = model.index_of(m + dm, n + dn);
      if (!match_move(model.witnesses[i], model.witnesses[j], cc, atlas))
        throw WitnessVerificationError("lattice step " + model.witnesses[i].to_string() + " -> " +
                                       model.witnesses[j].to_string() + " is not a catalog move");
      model.lattice.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  model.bounds.assign(model.points.size(), std::vector<DistanceBound>(model.points.size()));
  for (std::size_t i = 0; i < model.points.size(); ++i)
    for (std::size_t j = i + 1; j < model.points.size(); ++j) {
      auto [m1, n1] = model.points[i];
      auto [m2, n2] = model.points[j];
      std::int64_t dm = std::abs(m1 - m2), dn = std::abs(n1 - n2);
      DistanceBound& b = model.bounds[i][j];
      b.raise_lower(Rational(std::max(dm, dn)), {"invariant-difference", {{"g4", std::to_string(dm)}, {"u", std::to_string(dn)}}});
      b.lower_upper(Integer(dm + dn), {"bi-lipschitz", {{"l1", std::to_string(dm + dn)}, {"hypothesis", "single moves change one coordinate"}}});
    }
  return model;
}

/// Graph on {0..N} with edges {n, 0} and {n, m} for |n - m| = 4.
inline MetricGraph noncompatible_model(std::int64_t size) {
  if (size < 5) throw std::invalid_argument("noncompatible_model: N must be >= 5");
  MetricGraph g;
  for (std::int64_t v = 0; v <= size; ++v) g.add_vertex(std::to_string(v));
  for (std::int64_t v = 1; v <= size; ++v) g.add_edge(0, static_cast<Vertex>(v));
  for (std::int64_t v = 0; v + 4 <= size; ++v) g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(v + 4));
  return g;
}

/// Sample of catalog moves of one kind, each checked by match_move.
inline std::vector<MoveCatalogEntry> catalog_sample(MoveKind kind, std::int64_t size,
                                                    const KnotAtlas& atlas = KnotAtlas::builtin()) {
  std::vector<std::pair<FormalKnot, FormalKnot>> pairs;
  for (std::int64_t j = 1; j <= size; ++j) {
    FormalKnot t = FormalKnot::torus(2, 2 * j + 1), mt = FormalKnot::torus(-2, 2 * j + 1);
    if (kind.is_band()) {
      pairs.emplace_back(t, FormalKnot::unknot());
      if (j >= 3) pairs.emplace_back(t, FormalKnot::torus(2, 2 * j - 3));
      pairs.emplace_back(FormalKnot::torus(2 * j + 1, 2 * j + 2),
                         j == 1 ? FormalKnot::unknot() : FormalKnot::torus(2 * j - 1, 2 * j));
    } else {
      pairs.emplace_back(t, j == 1 ? FormalKnot::unknot() : FormalKnot::torus(2, 2 * j - 1));
      pairs.emplace_back(mt, j == 1 ? FormalKnot::unknot() : FormalKnot::torus(-2, 2 * j - 1));
    }
  }
  if (!kind.is_band() || kind.n >= 3) {
    pairs.emplace_back(FormalKnot::named("6_1"), FormalKnot::unknot());
    pairs.emplace_back(FormalKnot::named("Wh"), FormalKnot::unknot());
  }
  std::vector<MoveCatalogEntry> out;
  for (const auto& [a, b] : pairs) {
    auto m = match_move(a, b, kind, atlas);
    if (!m) throw std::logic_error("catalog sample " + a.to_string() + " -> " + b.to_string() + " has no match");
    out.push_back(*m);
  }
  return out;
}

struct CompatibilityResult {
  bool compatible = true;
  std::optional<MoveCatalogEntry> witness;
  Integer change = 0;  // |Delta I| at the witness
};

/// Whether each sampled move changes the invariant by at most 1.
inline CompatibilityResult check_compatibility(QuotientInvariant q, const std::vector<MoveCatalogEntry>& sample,
                                               const KnotAtlas& atlas = KnotAtlas::builtin()) {
  for (const auto& entry : sample) {
    Integer delta = abs(Integer(invariant_value(q, entry.source, atlas) - invariant_value(q, entry.target, atlas)));
    if (delta > 1) return {false, entry, delta};
  }
  return {};
}

}  // namespace knotgraph
