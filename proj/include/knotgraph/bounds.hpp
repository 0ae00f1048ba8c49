#pragma once

#include "knotgraph/knots.hpp"
#include "knotgraph/moves.hpp"
#include "knotgraph/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace knotgraph {

/// One step of a bound's justification: a rule name with its parameters.
struct BoundCertificate {
  std::string rule;
  std::vector<std::pair<std::string, std::string>> params;

  /// "hnt: m=9, n=2"
  std::string to_string() const {
    std::string s = rule;
    for (std::size_t i = 0; i < params.size(); ++i)
      s += (i ? ", " : ": ") + params[i].first + "=" + params[i].second;
    return s;
  }
  friend bool operator==(const BoundCertificate&, const BoundCertificate&) = default;
};

/// Certified interval for an integer-valued distance. The lower bound stays an
/// exact rational; only lower_integer() rounds.
class DistanceBound {
 public:
  const Rational& lower_rational() const { return lower_; }
  Integer lower_integer() const { return ceil(lower_); }
  const std::optional<Integer>& upper() const { return upper_; }
  const std::vector<BoundCertificate>& provenance() const { return provenance_; }

  bool exact() const { return upper_ && lower_integer() == *upper_; }

  /// Raises the lower bound if value improves it. Returns whether it changed.
  bool raise_lower(const Rational& value, BoundCertificate why) {
    if (value <= lower_) return false;
    if (upper_ && ceil(value) > *upper_)
      throw std::logic_error("lower bound " + knotgraph::to_string(value) + " (" + why.to_string() +
                             ") exceeds upper bound " + upper_->str());
    lower_ = value;
    provenance_.push_back(std::move(why));
    return true;
  }

  /// Lowers the upper bound if value improves it. Returns whether it changed.
  bool lower_upper(const Integer& value, BoundCertificate why) {
    if (value < 0) throw std::invalid_argument("distance upper bound must be >= 0");
    if (upper_ && value >= *upper_) return false;
    if (lower_integer() > value)
      throw std::logic_error("upper bound " + value.str() + " (" + why.to_string() + ") is below lower bound " +
                             knotgraph::to_string(lower_));
    upper_ = value;
    provenance_.push_back(std::move(why));
    return true;
  }

  std::string to_string() const {
    return "[" + knotgraph::to_string(lower_) + ", " + (upper_ ? upper_->str() : std::string("?")) + "]";
  }

 private:
  Rational lower_ = 0;
  std::optional<Integer> upper_;
  std::vector<BoundCertificate> provenance_;
};

/// The cover degrees searched by default.
inline const std::vector<std::uint64_t>& default_cover_degrees() {
  static const std::vector<std::uint64_t> degrees{2, 3, 5, 9};
  return degrees;
}

/// |e_m(K) - e_m(K')| / ((n-1)(m-1)) <= d_n(K, K').
inline Rational hnt_lower(const FormalKnot& k1, const FormalKnot& k2, unsigned n, std::uint64_t m,
                          const KnotAtlas& atlas = KnotAtlas::builtin()) {
  if (n < 2) throw std::invalid_argument("hnt_lower: n must be >= 2");
  if (m < 2) throw std::invalid_argument("hnt_lower: cover degree must be >= 2");
  Integer a = e(k1, m, atlas), b = e(k2, m, atlas);
  return Rational(abs(Integer(a - b)), Integer(n - 1) * Integer(m - 1));
}

/// max(|e_2^3(K) - e_2^3(K')|, |e_2^5(K) - e_2^5(K')|) <= d_2(K, K').
inline Integer ak_lower_d2(const FormalKnot& k1, const FormalKnot& k2, const KnotAtlas& atlas = KnotAtlas::builtin()) {
  Integer best = 0;
  for (int p : {3, 5}) {
    Integer d = abs(Integer(Integer(e_mod_p(k1, 2, p, atlas)) - Integer(e_mod_p(k2, 2, p, atlas))));
    if (d > best) best = d;
  }
  return best;
}

/// The F_p half of ak_lower_d2, for callers that need a specific prime.
inline Integer ak_lower_d2_mod(const FormalKnot& k1, const FormalKnot& k2, int p,
                               const KnotAtlas& atlas = KnotAtlas::builtin()) {
  return abs(Integer(Integer(e_mod_p(k1, 2, p, atlas)) - Integer(e_mod_p(k2, 2, p, atlas))));
}

/// max(|tau(K) - tau(K')|, |s'(K) - s'(K')|) bounds the concordance crossing-change distance.
inline Integer concordance_lower(const FormalKnot& k1, const FormalKnot& k2,
                                 const KnotAtlas& atlas = KnotAtlas::builtin()) {
  Integer t = abs(Integer(tau(k1, atlas) - tau(k2, atlas)));
  Integer s = abs(Integer(s_half(k1, atlas) - s_half(k2, atlas)));
  return t > s ? t : s;
}

/// Direct lower bounds on d_n: hnt over the given degrees, plus the F_3/F_5
/// bound when n = 2. Degrees without cover data are skipped.
inline DistanceBound hn_lower_bound(const FormalKnot& k1, const FormalKnot& k2, unsigned n,
                                    const std::vector<std::uint64_t>& degrees = default_cover_degrees(),
                                    const KnotAtlas& atlas = KnotAtlas::builtin()) {
  DistanceBound b;
  for (std::uint64_t m : degrees) {
    try {
      b.raise_lower(hnt_lower(k1, k2, n, m, atlas),
                    {"hnt", {{"m", std::to_string(m)}, {"n", std::to_string(n)}}});
    } catch (const UnsupportedCoverError&) {
    }
  }
  if (n == 2) {
    for (int p : {3, 5}) {
      try {
        b.raise_lower(Rational(ak_lower_d2_mod(k1, k2, p, atlas)), {"mod-p-cover", {{"m", "2"}, {"p", std::to_string(p)}}});
      } catch (const UnsupportedCoverError&) {
      }
    }
  }
  return b;
}

using BoundTable = std::map<unsigned, DistanceBound>;

/// Closes a table of d_n bounds (keys n >= 2, all for one knot pair) under:
///   (i)   d_{n+1} <= d_n: lower bounds flow down in n, upper bounds flow up;
///   (ii)  an H(j)-move is j-1 bands, so if u bounds d_n then the (n-1)u
///         bands form one H((n-1)u+1)-move and d_j <= 1 for j >= (n-1)u+1;
///   (iii) one H(j)-move costs at most (3/2)(j-1) H(2)-moves, which with
///         j = (n-1)d_n + 1 gives (n-1) d_n >= (2/3) d_2 for n >= 3.
inline BoundTable propagate(BoundTable table) {
  for (const auto& [n, b] : table)
    if (n < 2) throw std::invalid_argument("bound table keys must be >= 2");
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto a = table.begin(); a != table.end(); ++a) {
      for (auto b = std::next(a); b != table.end(); ++b) {
        // a->first < b->first
        const std::string from_b = std::to_string(b->first), from_a = std::to_string(a->first);
        if (b->second.lower_rational() > a->second.lower_rational())
          changed |= a->second.raise_lower(b->second.lower_rational(), {"monotone-lower", {{"from", "d_" + from_b}}});
        if (a->second.upper())
          changed |= b->second.lower_upper(*a->second.upper(), {"monotone-upper", {{"from", "d_" + from_a}}});
      }
    }
    for (auto& [n, bound] : table) {
      if (!bound.upper() || *bound.upper() < 1) continue;
      Integer reach = Integer(n - 1) * *bound.upper() + 1;
      for (auto& [j, other] : table)
        if (Integer(j) >= reach)
          changed |= other.lower_upper(1, {"bands-merge", {{"from", "d_" + std::to_string(n)}, {"u", bound.upper()->str()}}});
    }
    auto two = table.find(2);
    if (two != table.end() && two->second.lower_rational() > 0) {
      Integer d2 = two->second.lower_integer();
      for (auto& [n, bound] : table) {
        if (n < 3) continue;
        Rational lift = Rational(2, 3) * d2 / Integer(n - 1);
        changed |= bound.raise_lower(lift, {"hnt-lift", {{"d_2", d2.str()}, {"n", std::to_string(n)}}});
      }
    }
  }
  return table;
}

/// Constants with d_2/a - b <= d_n <= d_2 on all knot pairs (the identity
/// map is an (a, b)-quasi-isometry with C = 0).
struct QuasiIsometryConstants {
  unsigned n;
  Rational a;
  Rational b;
  Rational C;
  std::vector<std::string> derivation;
};

inline QuasiIsometryConstants quasi_isometry_constants(unsigned n) {
  if (n < 3) throw std::invalid_argument("quasi_isometry_constants: n must be >= 3");
  QuasiIsometryConstants q{n, Rational(3 * Integer(n - 1), 2), 0, 0, {}};
  q.derivation = {
      "upper: d_n <= d_2, since an H(2)-move is realised by an H(n)-move",
      "lower: (n-1) d_n >= (2/3) d_2, so d_n >= d_2/a with a = 3(n-1)/2 and b = 0",
      "the identity on vertices is surjective, so C = 0",
  };
  return q;
}

/// Bounds on d(k1, k2) for one move kind. For H(n) the table over 2..n is
/// built and propagated; for crossing changes the concordance invariants give
/// the lower bound. Upper bounds come from catalog paths.
inline BoundTable distance_table(const FormalKnot& k1, const FormalKnot& k2, MoveKind kind,
                                 const std::vector<std::uint64_t>& degrees = default_cover_degrees(),
                                 const KnotAtlas& atlas = KnotAtlas::builtin()) {
  require_known(k1, atlas);
  require_known(k2, atlas);
  auto add_path_upper = [&](DistanceBound& b, MoveKind mk) {
    if (k1 == k2) {
      b.lower_upper(0, {"identical", {}});
      return;
    }
    if (auto path = catalog_path(k1, k2, mk, atlas))
      b.lower_upper(Integer(upper_from_path(*path, mk, atlas)),
                    {"catalog-path", {{"move", mk.to_string()}, {"length", std::to_string(path->size() - 1)}}});
  };
  BoundTable table;
  if (!kind.is_band()) {
    DistanceBound b;
    b.raise_lower(Rational(concordance_lower(k1, k2, atlas)), {"concordance", {{"invariants", "tau,s/2"}}});
    add_path_upper(b, kind);
    table.emplace(0, std::move(b));
    return table;
  }
  for (unsigned n = 2; n <= kind.n; ++n) {
    DistanceBound b = hn_lower_bound(k1, k2, n, degrees, atlas);
    add_path_upper(b, MoveKind::hn(n));
    table.emplace(n, std::move(b));
  }
  return propagate(std::move(table));
}

}  // namespace knotgraph
