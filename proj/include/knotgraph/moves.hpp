#pragma once

#include "knotgraph/knots.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotgraph {

/// Unknotting operation: the H(n)-move (n >= 2; H(2) is the noncoherent band
/// move) or the crossing change.
struct MoveKind {
  enum class Type { band, crossing_change };
  Type type = Type::crossing_change;
  unsigned n = 0;  // only for Type::band

  static MoveKind hn(unsigned n) {
    if (n < 2) throw std::invalid_argument("H(n)-moves need n >= 2");
    return {Type::band, n};
  }
  static MoveKind crossing_change() { return {Type::crossing_change, 0}; }

  bool is_band() const { return type == Type::band; }
  std::string to_string() const { return is_band() ? "H(" + std::to_string(n) + ")" : "crossing change"; }
  friend bool operator==(const MoveKind&, const MoveKind&) = default;
};

/// A certified single move between two knots, after cancelling common summands.
struct MoveCatalogEntry {
  MoveKind kind;
  std::string rule;
  FormalKnot source;  // residual summands on one side
  FormalKnot target;  // residual summands on the other side
  std::string citation;

  std::string to_string() const {
    return kind.to_string() + " [" + rule + "]: " + source.to_string() + " -> " + target.to_string();
  }
};

class PathStepError : public std::invalid_argument {
 public:
  PathStepError(std::size_t step, const std::string& message)
      : std::invalid_argument("step " + std::to_string(step) + ": " + message), step_(step) {}
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

namespace detail {

struct Decoration {
  bool mirrored;
  bool reversed;
  friend bool operator==(const Decoration&, const Decoration&) = default;
};

// The single generator of k together with its multiplicity, if k has exactly one
// distinct summand.
inline std::optional<std::pair<GeneratorKnot, std::uint64_t>> sole_summand(const FormalKnot& k) {
  if (k.summands().size() != 1) return std::nullopt;
  return *k.summands().begin();
}

inline const TorusKnot* torus_of(const GeneratorKnot& g) { return g.as_torus(); }

inline bool same_decoration(const GeneratorKnot& a, const GeneratorKnot& b) {
  return a.mirrored == b.mirrored && a.reversed == b.reversed;
}

// A -> U where A = #^j T(2,k), 1 <= j <= n-1: the n-1 parallel bands of one H(n)-move.
inline std::optional<MoveCatalogEntry> torus_block_unknot(const FormalKnot& a, const FormalKnot& b, MoveKind kind) {
  if (!kind.is_band() || !b.is_unknot()) return std::nullopt;
  auto s = sole_summand(a);
  if (!s) return std::nullopt;
  const TorusKnot* t = torus_of(s->first);
  if (t == nullptr || t->p != 2 || s->second > kind.n - 1) return std::nullopt;
  return MoveCatalogEntry{kind, "torus-block-unknotting", a, b,
                          "#^(n-1) T(2,k), k odd, is unknotted by a single H(n)-move (Hoste-Nakanishi-Taniyama)"};
}

// T(2,a) -> T(2,a-4) by one band move across two of the twists.
inline std::optional<MoveCatalogEntry> twist_by_four(const FormalKnot& a, const FormalKnot& b, MoveKind kind) {
  if (!kind.is_band()) return std::nullopt;
  auto sa = sole_summand(a), sb = sole_summand(b);
  if (!sa || !sb || sa->second != 1 || sb->second != 1 || !same_decoration(sa->first, sb->first)) return std::nullopt;
  const TorusKnot *ta = torus_of(sa->first), *tb = torus_of(sb->first);
  if (!ta || !tb || ta->p != 2 || tb->p != 2 || ta->q != tb->q + 4) return std::nullopt;
  return MoveCatalogEntry{kind, "band-twist-reduction", a, b, "a band move changes T(2n+1,2) into T(2n-3,2)"};
}

// T(2j+2, 2j+1) -> T(2j, 2j-1), and T(4,3) -> U, by one band move (Batson's family).
inline std::optional<MoveCatalogEntry> nonorientable_genus_family(const FormalKnot& a, const FormalKnot& b,
                                                                  MoveKind kind) {
  if (!kind.is_band()) return std::nullopt;
  auto sa = sole_summand(a);
  if (!sa || sa->second != 1) return std::nullopt;
  const TorusKnot* ta = torus_of(sa->first);
  if (!ta || ta->q != ta->p + 1 || ta->q % 2 != 0) return std::nullopt;
  if (ta->p == 3 && b.is_unknot())
    return MoveCatalogEntry{kind, "gamma4-family", a, b, "consecutive knots T(2n+2,2n+1) are related by a band move"};
  auto sb = sole_summand(b);
  if (!sb || sb->second != 1 || !same_decoration(sa->first, sb->first)) return std::nullopt;
  const TorusKnot* tb = torus_of(sb->first);
  if (!tb || tb->q != tb->p + 1 || tb->p != ta->p - 2) return std::nullopt;
  return MoveCatalogEntry{kind, "gamma4-family", a, b, "consecutive knots T(2n+2,2n+1) are related by a band move"};
}

// Single generator with unknotting number one -> U. A crossing change is also an H(3)-move.
inline std::optional<MoveCatalogEntry> unknotting_number_one(const FormalKnot& a, const FormalKnot& b, MoveKind kind,
                                                             const KnotAtlas& atlas) {
  if (kind.is_band() && kind.n < 3) return std::nullopt;
  if (!b.is_unknot()) return std::nullopt;
  auto s = sole_summand(a);
  if (!s || s->second != 1) return std::nullopt;
  if (generator_data(s->first, atlas).u.upper != 1) return std::nullopt;
  return MoveCatalogEntry{kind, "unknotting-number-one", a, b,
                          kind.is_band() ? "crossing change realised as an H(3)-move; H(3) realised by H(n), n >= 3"
                                         : "generator with unknotting number one"};
}

// T(2,a) -> T(2,a-2): one crossing change in the 2-braid.
inline std::optional<MoveCatalogEntry> twist_by_two(const FormalKnot& a, const FormalKnot& b, MoveKind kind) {
  if (kind.is_band() && kind.n < 3) return std::nullopt;
  auto sa = sole_summand(a), sb = sole_summand(b);
  if (!sa || !sb || sa->second != 1 || sb->second != 1 || !same_decoration(sa->first, sb->first)) return std::nullopt;
  const TorusKnot *ta = torus_of(sa->first), *tb = torus_of(sb->first);
  if (!ta || !tb || ta->p != 2 || tb->p != 2 || ta->q != tb->q + 2) return std::nullopt;
  return MoveCatalogEntry{kind, "crossing-twist-reduction", a, b, "one crossing change turns T(2,k) into T(2,k-2)"};
}

inline std::optional<MoveCatalogEntry> match_residual(const FormalKnot& a, const FormalKnot& b, MoveKind kind,
                                                      const KnotAtlas& atlas) {
  if (auto m = torus_block_unknot(a, b, kind)) return m;
  if (auto m = twist_by_four(a, b, kind)) return m;
  if (auto m = nonorientable_genus_family(a, b, kind)) return m;
  if (auto m = unknotting_number_one(a, b, kind, atlas)) return m;
  if (auto m = twist_by_two(a, b, kind)) return m;
  return std::nullopt;
}

}  // namespace detail

/// Looks for a catalog move relating a and b, after cancelling their common
/// connected summands (d(C#A, C#B) <= d(A, B)). Moves are symmetric.
inline std::optional<MoveCatalogEntry> match_move(const FormalKnot& a, const FormalKnot& b, MoveKind kind,
                                                  const KnotAtlas& atlas = KnotAtlas::builtin()) {
  FormalKnot common = common_part(a, b);
  FormalKnot ra = remove_summands(a, common), rb = remove_summands(b, common);
  if (ra.is_unknot() && rb.is_unknot()) return std::nullopt;
  if (auto m = detail::match_residual(ra, rb, kind, atlas)) return m;
  if (auto m = detail::match_residual(rb, ra, kind, atlas)) return m;
  return std::nullopt;
}

/// Certifies each consecutive step of path against the catalog.
inline std::vector<MoveCatalogEntry> certify_path(const std::vector<FormalKnot>& path, MoveKind kind,
                                                  const KnotAtlas& atlas = KnotAtlas::builtin()) {
  std::vector<MoveCatalogEntry> steps;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    auto m = match_move(path[i], path[i + 1], kind, atlas);
    if (!m)
      throw PathStepError(i, "no " + kind.to_string() + " catalog move relates " + path[i].to_string() + " and " +
                                 path[i + 1].to_string());
    steps.push_back(std::move(*m));
  }
  return steps;
}

/// Length of a catalog-certified path: an upper bound on the distance between its ends.
inline std::uint64_t upper_from_path(const std::vector<FormalKnot>& path, MoveKind kind,
                                     const KnotAtlas& atlas = KnotAtlas::builtin()) {
  return certify_path(path, kind, atlas).size();
}

namespace detail {

// Residual states from k down to the unknot, one catalog move apart.
inline std::optional<std::vector<FormalKnot>> dismantle(const FormalKnot& k, MoveKind kind, const KnotAtlas& atlas) {
  std::vector<FormalKnot> states{k};
  FormalKnot current = k;
  for (const auto& [g, count] : k.summands()) {
    const TorusKnot* t = g.as_torus();
    auto decorate = [&g](GeneratorKnot h) {
      h.mirrored = g.mirrored;
      h.reversed = g.reversed;
      return h;
    };
    std::uint64_t left = count;
    while (left > 0) {
      FormalKnot without_one = remove_summands(current, FormalKnot(g, 1));
      if (kind.is_band() && t && t->p == 2) {
        std::uint64_t block = std::min<std::uint64_t>(left, kind.n - 1);
        current = remove_summands(current, FormalKnot(g, block));
        states.push_back(current);
        left -= block;
        continue;
      }
      if (generator_data(g, atlas).u.upper == 1 && (!kind.is_band() || kind.n >= 3)) {
        current = without_one;
        states.push_back(current);
        --left;
        continue;
      }
      if (t && t->p == 2 && !kind.is_band()) {
        for (std::int64_t q = t->q - 2; q >= 3; q -= 2) states.push_back(without_one + FormalKnot(decorate(GeneratorKnot::torus(2, q))));
        current = without_one;
        states.push_back(current);
        --left;
        continue;
      }
      if (t && kind.is_band() && t->q == t->p + 1 && t->q % 2 == 0) {
        for (std::int64_t p = t->p - 2; p >= 3; p -= 2)
          states.push_back(without_one + FormalKnot(decorate(GeneratorKnot::torus(p, p + 1))));
        current = without_one;
        states.push_back(current);
        --left;
        continue;
      }
      return std::nullopt;
    }
  }
  return states;
}

}  // namespace detail

/// A catalog path from a to b: strip a's extra summands down to the common
/// part, then add b's. Empty optional if some summand has no catalog route.
inline std::optional<std::vector<FormalKnot>> catalog_path(const FormalKnot& a, const FormalKnot& b, MoveKind kind,
                                                           const KnotAtlas& atlas = KnotAtlas::builtin()) {
  FormalKnot common = common_part(a, b);
  auto down = detail::dismantle(remove_summands(a, common), kind, atlas);
  auto up = detail::dismantle(remove_summands(b, common), kind, atlas);
  if (!down || !up) return std::nullopt;
  std::vector<FormalKnot> path;
  for (const auto& s : *down) path.push_back(common + s);
  for (auto it = std::next(up->rbegin()); it != up->rend(); ++it) path.push_back(common + *it);
  return path;
}

}  // namespace knotgraph
