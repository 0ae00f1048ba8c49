#pragma once

#include "knotgraph/abelian.hpp"
#include "knotgraph/brieskorn.hpp"
#include "knotgraph/numeric.hpp"

#include <cctype>
#include <compare>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace knotgraph {

class UnknownKnotError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedCoverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Positive torus knot T(p, q), normalised so that 2 <= p < q and gcd(p, q) = 1.
struct TorusKnot {
  std::int64_t p = 2;
  std::int64_t q = 3;
  friend auto operator<=>(const TorusKnot&, const TorusKnot&) = default;
};

/// A knot from the named part of the atlas, referenced by its identifier.
struct NamedKnot {
  std::string name;
  friend auto operator<=>(const NamedKnot&, const NamedKnot&) = default;
};

/// One connected-sum generator: a torus knot or named knot with optional
/// mirror / orientation-reversal decorations.
struct GeneratorKnot {
  std::variant<TorusKnot, NamedKnot> base;
  bool mirrored = false;
  bool reversed = false;

  /// T(p, q) for integer parameters. A negative product p*q yields the mirror of
  /// T(|p|, |q|). Requires |p|, |q| >= 2 and gcd(p, q) = 1.
  static GeneratorKnot torus(std::int64_t p, std::int64_t q) {
    bool mirror = (p < 0) != (q < 0);
    std::int64_t a = p < 0 ? -p : p;
    std::int64_t b = q < 0 ? -q : q;
    if (a < 2 || b < 2)
      throw std::invalid_argument("torus knot parameters must satisfy |p|, |q| >= 2: T(" + std::to_string(p) + "," +
                                  std::to_string(q) + ")");
    if (std::gcd(a, b) != 1)
      throw std::invalid_argument("torus knot parameters must be coprime: T(" + std::to_string(p) + "," +
                                  std::to_string(q) + ")");
    if (a > b) std::swap(a, b);
    return GeneratorKnot{TorusKnot{a, b}, mirror, false};
  }

  static GeneratorKnot named(std::string name) { return GeneratorKnot{NamedKnot{std::move(name)}, false, false}; }

  const TorusKnot* as_torus() const { return std::get_if<TorusKnot>(&base); }
  const NamedKnot* as_named() const { return std::get_if<NamedKnot>(&base); }

  GeneratorKnot mirror() const {
    GeneratorKnot g = *this;
    g.mirrored = !g.mirrored;
    return g;
  }
  GeneratorKnot reverse() const {
    GeneratorKnot g = *this;
    g.reversed = !g.reversed;
    return g;
  }

  /// Surface syntax of the knot expression grammar: T(2,3), 6_1, m(T(2,3)), r(m(Wh)).
  std::string to_string() const {
    std::string s;
    if (const auto* t = as_torus())
      s = "T(" + std::to_string(t->p) + "," + std::to_string(t->q) + ")";
    else
      s = as_named()->name;
    if (mirrored) s = "m(" + s + ")";
    if (reversed) s = "r(" + s + ")";
    return s;
  }

  friend auto operator<=>(const GeneratorKnot& a, const GeneratorKnot& b) {
    if (auto c = a.base.index() <=> b.base.index(); c != 0) return c;
    if (auto c = a.base <=> b.base; c != 0) return c;
    if (auto c = a.mirrored <=> b.mirrored; c != 0) return c;
    return a.reversed <=> b.reversed;
  }
  friend bool operator==(const GeneratorKnot&, const GeneratorKnot&) = default;
};

/// Formal connected sum of generators with multiplicities; the empty sum is the unknot.
class FormalKnot {
 public:
  using Summands = std::map<GeneratorKnot, std::uint64_t>;

  FormalKnot() = default;
  explicit FormalKnot(const GeneratorKnot& g, std::uint64_t copies = 1) { add(g, copies); }

  static FormalKnot unknot() { return {}; }
  static FormalKnot torus(std::int64_t p, std::int64_t q, std::uint64_t copies = 1) {
    return FormalKnot(GeneratorKnot::torus(p, q), copies);
  }
  static FormalKnot named(std::string name, std::uint64_t copies = 1) {
    return FormalKnot(GeneratorKnot::named(std::move(name)), copies);
  }

  const Summands& summands() const { return summands_; }
  bool is_unknot() const { return summands_.empty(); }

  std::uint64_t multiplicity(const GeneratorKnot& g) const {
    auto it = summands_.find(g);
    return it == summands_.end() ? 0 : it->second;
  }

  std::uint64_t summand_count() const {
    std::uint64_t n = 0;
    for (const auto& [g, c] : summands_) n += c;
    return n;
  }

  void add(const GeneratorKnot& g, std::uint64_t copies = 1) {
    if (copies > 0) summands_[g] += copies;
  }

  friend FormalKnot connected_sum(const FormalKnot& a, const FormalKnot& b) {
    FormalKnot out = a;
    for (const auto& [g, c] : b.summands_) out.add(g, c);
    return out;
  }

  friend FormalKnot operator+(const FormalKnot& a, const FormalKnot& b) { return connected_sum(a, b); }

  /// copies-fold connected sum of k with itself.
  friend FormalKnot repeat(const FormalKnot& k, std::uint64_t copies) {
    FormalKnot out;
    for (const auto& [g, c] : k.summands_) out.add(g, c * copies);
    return out;
  }

  /// Multiset intersection.
  friend FormalKnot common_part(const FormalKnot& a, const FormalKnot& b) {
    FormalKnot out;
    for (const auto& [g, c] : a.summands_) out.add(g, std::min(c, b.multiplicity(g)));
    return out;
  }

  /// Multiset difference a - b (b's summands removed where present).
  friend FormalKnot remove_summands(const FormalKnot& a, const FormalKnot& b) {
    FormalKnot out;
    for (const auto& [g, c] : a.summands_) {
      std::uint64_t drop = std::min(c, b.multiplicity(g));
      out.add(g, c - drop);
    }
    return out;
  }

  /// Normalised surface syntax, e.g. "2*T(2,9) + T(2,15)"; "U" for the unknot.
  std::string to_string() const {
    if (is_unknot()) return "U";
    std::string out;
    for (const auto& [g, c] : summands_) {
      if (!out.empty()) out += " + ";
      if (c > 1) out += std::to_string(c) + "*";
      out += g.to_string();
    }
    return out;
  }

  friend bool operator==(const FormalKnot&, const FormalKnot&) = default;
  friend auto operator<=>(const FormalKnot& a, const FormalKnot& b) { return a.summands_ <=> b.summands_; }

 private:
  Summands summands_;
};

/// -K: reverse mirror, toggling both decorations on every summand.
inline FormalKnot reverse_mirror(const FormalKnot& k) {
  FormalKnot out;
  for (const auto& [g, c] : k.summands()) out.add(g.mirror().reverse(), c);
  return out;
}

inline FormalKnot mirror(const FormalKnot& k) {
  FormalKnot out;
  for (const auto& [g, c] : k.summands()) out.add(g.mirror(), c);
  return out;
}

/// Certified bounds on an integer invariant.
struct InvariantInterval {
  Integer lower;
  Integer upper;

  bool exact() const { return lower == upper; }
  std::string to_string() const { return exact() ? lower.str() : "[" + lower.str() + ", " + upper.str() + "]"; }
  friend bool operator==(const InvariantInterval&, const InvariantInterval&) = default;
};

/// Invariant data for a named (non-torus) knot. All values refer to the
/// undecorated knot; tau and s_half change sign under mirroring.
struct NamedKnotRecord {
  std::string name;
  std::string description;
  Integer tau;
  Integer s_half;
  InvariantInterval u;
  InvariantInterval g4;
  InvariantInterval gamma4;
  std::map<std::uint64_t, FiniteAbelianGroup> covers;  // cover degree -> H_1
};

class KnotAtlas {
 public:
  /// Compiled-in table of named knots.
  static const KnotAtlas& builtin() {
    static const KnotAtlas atlas = [] {
      KnotAtlas a;
      // Stevedore knot: ribbon, unknotting number one; the double branched
      // cover is the lens space L(9,2) ~ L(9,7).
      a.add({"6_1", "Stevedore knot", 0, 0, {1, 1}, {0, 0}, {0, 0}, {{2, FiniteAbelianGroup::cyclic(9)}}});
      // D_+(T(2,3),2): tau = 0, s/2 = 1 (Hedden-Ording); Whitehead doubles of
      // nontrivial knots have unknotting number one and a genus one Seifert surface.
      a.add({"Wh", "2-twisted positive Whitehead double of T(2,3)", 0, 1, {1, 1}, {1, 1}, {1, 3}, {}});
      return a;
    }();
    return atlas;
  }

  void add(NamedKnotRecord record) {
    if (record.name.empty()) throw std::invalid_argument("atlas record without a name");
    if (records_.count(record.name)) throw std::invalid_argument("duplicate atlas record '" + record.name + "'");
    for (const auto* iv : {&record.u, &record.g4, &record.gamma4})
      if (iv->lower > iv->upper || iv->lower < 0)
        throw std::invalid_argument("atlas record '" + record.name + "' has an empty or negative interval");
    records_.emplace(record.name, std::move(record));
  }

  const NamedKnotRecord* find(std::string_view name) const {
    auto it = records_.find(std::string(name));
    return it == records_.end() ? nullptr : &it->second;
  }

  const NamedKnotRecord& at(std::string_view name) const {
    if (const auto* r = find(name)) return *r;
    throw UnknownKnotError("knot '" + std::string(name) + "' is not in the atlas");
  }

  const std::map<std::string, NamedKnotRecord>& records() const { return records_; }

  /// Reads extension records, one per line:
  ///   name tau s_half u_upper g4_upper [cover:m=<degree>:<group> ...]
  /// '#' starts a comment line. Lower bounds are derived: g4 >= max(|tau|, |s_half|),
  /// u >= max(g4 lower, e_2) when the degree-2 cover is given.
  static KnotAtlas load_extension(std::istream& in, const KnotAtlas& base = builtin()) {
    KnotAtlas out = base;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream fields(line);
      auto fail = [&](const std::string& why) {
        throw std::invalid_argument("atlas line " + std::to_string(line_no) + ": " + why);
      };
      std::string name, tau, s_half, u_upper, g4_upper;
      if (!(fields >> name >> tau >> s_half >> u_upper >> g4_upper)) fail("expected 'name tau s_half u_upper g4_upper'");
      if (!valid_name(name)) fail("invalid knot name '" + name + "'");
      NamedKnotRecord rec;
      rec.name = name;
      rec.description = "atlas extension";
      try {
        rec.tau = parse_integer(tau);
        rec.s_half = parse_integer(s_half);
        rec.u.upper = parse_integer(u_upper);
        rec.g4.upper = parse_integer(g4_upper);
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
      std::string cover;
      while (fields >> cover) {
        // cover:m=<degree>:<group>
        if (!cover.starts_with("cover:m=")) fail("expected cover:m=<degree>:<group>, got '" + cover + "'");
        auto colon = cover.find(':', 8);
        if (colon == std::string::npos) fail("missing group in '" + cover + "'");
        try {
          Integer degree = parse_integer(cover.substr(8, colon - 8));
          if (degree < 2) fail("cover degree must be >= 2");
          rec.covers[to_u64(degree, "cover degree")] = parse_group(cover.substr(colon + 1));
        } catch (const std::invalid_argument& e) {
          fail(e.what());
        }
      }
      Integer lower = abs(rec.tau) > abs(rec.s_half) ? abs(rec.tau) : abs(rec.s_half);
      rec.g4.lower = lower;
      if (rec.g4.lower > rec.g4.upper) fail("g4_upper is below max(|tau|, |s_half|)");
      rec.u.lower = rec.g4.lower;
      if (auto it = rec.covers.find(2); it != rec.covers.end())
        rec.u.lower = std::max(rec.u.lower, Integer(min_generators(it->second)));
      if (rec.u.lower > rec.u.upper) fail("u_upper is below the derived lower bound");
      if (rec.g4.upper == 0)
        rec.gamma4 = {0, 0};
      else
        rec.gamma4 = {rec.g4.lower > 0 ? 1 : 0, 2 * rec.g4.upper + 1};
      try {
        out.add(std::move(rec));
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    return out;
  }

  static bool valid_name(std::string_view name) {
    if (name.empty() || name == "U" || name == "T" || name == "m" || name == "r" || name == "3_1") return false;
    for (char c : name)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
    return !std::isdigit(static_cast<unsigned char>(name.front())) || name.find('_') != std::string_view::npos;
  }

 private:
  static Integer parse_integer(std::string_view s) {
    Rational q = parse_rational(s);
    if (!is_integral(q)) throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    return numerator_of(q);
  }

  std::map<std::string, NamedKnotRecord> records_;
};

namespace detail {

inline Integer torus_genus(const TorusKnot& t) { return Integer((t.p - 1)) * (t.q - 1) / 2; }

struct GeneratorData {
  Integer tau;
  Integer s_half;
  InvariantInterval u;
  InvariantInterval g4;
  InvariantInterval gamma4;
};

inline GeneratorData generator_data(const GeneratorKnot& g, const KnotAtlas& atlas) {
  GeneratorData d;
  if (const auto* t = g.as_torus()) {
    // Positive torus knots: tau = s/2 = g4 = u = (p-1)(q-1)/2.
    Integer genus = torus_genus(*t);
    d.tau = d.s_half = genus;
    d.u = d.g4 = {genus, genus};
    if (t->p == 2)
      d.gamma4 = {1, 1};  // T(2,q) bounds a Moebius band and is not slice
    else if (t->q == t->p + 1 && t->q % 2 == 0)
      d.gamma4 = {Integer(t->p / 2), Integer(t->p / 2)};  // T(2n+2, 2n+1): gamma4 = n (Batson)
    else
      d.gamma4 = {1, 2 * genus + 1};
  } else {
    const auto& rec = atlas.at(g.as_named()->name);
    d.tau = rec.tau;
    d.s_half = rec.s_half;
    d.u = rec.u;
    d.g4 = rec.g4;
    d.gamma4 = rec.gamma4;
  }
  if (g.mirrored) {
    d.tau = -d.tau;
    d.s_half = -d.s_half;
  }
  return d;
}

}  // namespace detail

/// Ozsvath-Szabo tau, additive under connected sum.
inline Integer tau(const FormalKnot& k, const KnotAtlas& atlas = KnotAtlas::builtin()) {
  Integer total = 0;
  for (const auto& [g, c] : k.summands()) total += detail::generator_data(g, atlas).tau * c;
  return total;
}

/// Half the Rasmussen invariant, additive under connected sum.
inline Integer s_half(const FormalKnot& k, const KnotAtlas& atlas = KnotAtlas::builtin()) {
  Integer total = 0;
  for (const auto& [g, c] : k.summands()) total += detail::generator_data(g, atlas).s_half * c;
  return total;
}

/// H_1 of the m-fold cyclic branched cover. Torus summands use
/// Sigma_m(T(p,q)) = Sigma(p, q, m); named summands need a tabulated degree.
inline FiniteAbelianGroup branched_cover_homology(const FormalKnot& k, std::uint64_t degree,
                                                  const KnotAtlas& atlas = KnotAtlas::builtin()) {
  if (degree < 2) throw std::invalid_argument("cover degree must be >= 2");
  FiniteAbelianGroup total;
  for (const auto& [g, c] : k.summands()) {
    FiniteAbelianGroup part;
    if (const auto* t = g.as_torus()) {
      part = homology(BrieskornWeights(t->p, t->q, Integer(degree)));
    } else {
      const auto& rec = atlas.at(g.as_named()->name);
      auto it = rec.covers.find(degree);
      if (it == rec.covers.end())
        throw UnsupportedCoverError("no degree-" + std::to_string(degree) + " cover data for '" + rec.name + "'");
      part = it->second;
    }
    total = direct_sum(total, repeat(part, c));
  }
  return total;
}

/// Minimal number of generators of H_1(Sigma_m(K); Z).
inline std::uint64_t e(const FormalKnot& k, std::uint64_t degree, const KnotAtlas& atlas = KnotAtlas::builtin()) {
  return min_generators(branched_cover_homology(k, degree, atlas));
}

/// Minimal number of generators of H_1(Sigma_m(K); Z_p).
inline std::uint64_t e_mod_p(const FormalKnot& k, std::uint64_t degree, const Integer& p,
                             const KnotAtlas& atlas = KnotAtlas::builtin()) {
  return mod_p_dimension(branched_cover_homology(k, degree, atlas), p);
}

inline std::optional<std::uint64_t> try_e(const FormalKnot& k, std::uint64_t degree,
                                          const KnotAtlas& atlas = KnotAtlas::builtin()) {
  try {
    return e(k, degree, atlas);
  } catch (const UnsupportedCoverError&) {
    return std::nullopt;
  }
}

namespace detail {

inline const GeneratorKnot* single_generator(const FormalKnot& k) {
  if (k.summands().size() == 1 && k.summands().begin()->second == 1) return &k.summands().begin()->first;
  return nullptr;
}

inline Integer concordance_floor(const FormalKnot& k, const KnotAtlas& atlas) {
  Integer t = abs(tau(k, atlas)), s = abs(s_half(k, atlas));
  return t > s ? t : s;
}

template <class Select>
Integer upper_sum(const FormalKnot& k, const KnotAtlas& atlas, Select select) {
  Integer total = 0;
  for (const auto& [g, c] : k.summands()) total += select(generator_data(g, atlas)).upper * c;
  return total;
}

}  // namespace detail

/// Smooth 4-genus: lower bound max(|tau|, |s/2|), upper bound by subadditivity.
inline InvariantInterval g4_interval(const FormalKnot& k, const KnotAtlas& atlas = KnotAtlas::builtin()) {
  InvariantInterval out{detail::concordance_floor(k, atlas),
                        detail::upper_sum(k, atlas, [](const auto& d) { return d.g4; })};
  if (const auto* g = detail::single_generator(k)) {
    auto rec = detail::generator_data(*g, atlas).g4;
    out.lower = std::max(out.lower, rec.lower);
    out.upper = std::min(out.upper, rec.upper);
  }
  return out;
}

/// Unknotting number: lower bound max(g4 lower, e_2) (e_2 <= u), upper by subadditivity.
inline InvariantInterval u_interval(const FormalKnot& k, const KnotAtlas& atlas = KnotAtlas::builtin()) {
  InvariantInterval out{g4_interval(k, atlas).lower, detail::upper_sum(k, atlas, [](const auto& d) { return d.u; })};
  if (auto e2 = try_e(k, 2, atlas)) out.lower = std::max(out.lower, Integer(*e2));
  if (const auto* g = detail::single_generator(k)) {
    auto rec = detail::generator_data(*g, atlas).u;
    out.lower = std::max(out.lower, rec.lower);
    out.upper = std::min(out.upper, rec.upper);
  }
  return out;
}

/// Nonorientable 4-genus. Exact only for single tabulated generators and the
/// unknot; otherwise 1 when a concordance invariant shows the knot is not slice.
inline InvariantInterval gamma4_interval(const FormalKnot& k, const KnotAtlas& atlas = KnotAtlas::builtin()) {
  if (k.is_unknot()) return {0, 0};
  if (const auto* g = detail::single_generator(k)) return detail::generator_data(*g, atlas).gamma4;
  InvariantInterval out{detail::concordance_floor(k, atlas) > 0 ? 1 : 0,
                        detail::upper_sum(k, atlas, [](const auto& d) { return d.gamma4; })};
  if (out.lower > out.upper) out.lower = out.upper;
  return out;
}

/// Throws UnknownKnotError if some named summand is missing from the atlas.
inline void require_known(const FormalKnot& k, const KnotAtlas& atlas = KnotAtlas::builtin()) {
  for (const auto& [g, c] : k.summands())
    if (const auto* n = g.as_named()) (void)atlas.at(n->name);
}

}  // namespace knotgraph
