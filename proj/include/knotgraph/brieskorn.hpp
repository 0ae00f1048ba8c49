#pragma once

#include "knotgraph/abelian.hpp"
#include "knotgraph/numeric.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotgraph {

/// Exponents (w1, w2, w3) of the Brieskorn manifold
/// Sigma(w1, w2, w3) = { z1^w1 + z2^w2 + z3^w3 = 0 } intersected with a small sphere.
class BrieskornWeights {
 public:
  BrieskornWeights(Integer w1, Integer w2, Integer w3) : w_{std::move(w1), std::move(w2), std::move(w3)} {
    for (const auto& w : w_)
      if (w <= 1) throw std::invalid_argument("Brieskorn weights must be > 1, got " + w.str());
  }

  /// 1-based access, matching the index sets I of {1,2,3}.
  const Integer& operator[](int index) const { return w_.at(static_cast<std::size_t>(index - 1)); }

  std::string to_string() const { return "(" + w_[0].str() + "," + w_[1].str() + "," + w_[2].str() + ")"; }

 private:
  std::array<Integer, 3> w_;
};

/// Subset of {1,2,3}, stored as a bit mask (bit i-1 set <=> i in the subset).
class IndexSubset {
 public:
  constexpr IndexSubset() = default;
  constexpr IndexSubset(std::initializer_list<int> members) {
    for (int i : members) {
      if (i < 1 || i > 3) throw std::out_of_range("index subset members must lie in {1,2,3}");
      mask_ |= static_cast<std::uint8_t>(1u << (i - 1));
    }
  }
  static constexpr IndexSubset from_mask(unsigned mask) {
    IndexSubset s;
    s.mask_ = static_cast<std::uint8_t>(mask & 7u);
    return s;
  }
  static constexpr IndexSubset all() { return from_mask(7); }

  constexpr unsigned mask() const { return mask_; }
  constexpr bool contains(int i) const { return (mask_ >> (i - 1)) & 1u; }
  constexpr int size() const { return ((mask_ >> 0) & 1) + ((mask_ >> 1) & 1) + ((mask_ >> 2) & 1); }
  constexpr bool is_subset_of(IndexSubset other) const { return (mask_ & ~other.mask_) == 0; }
  constexpr IndexSubset complement() const { return from_mask(~mask_ & 7u); }

  std::string to_string() const {
    std::string s = "{";
    for (int i = 1; i <= 3; ++i)
      if (contains(i)) s += (s.size() > 1 ? "," : "") + std::to_string(i);
    return s + "}";
  }

  friend constexpr bool operator==(IndexSubset, IndexSubset) = default;

 private:
  std::uint8_t mask_ = 0;
};

namespace detail {

// prod(w_J) / lcm(w_J), with the empty set contributing 1.
inline Integer product_over_lcm(const BrieskornWeights& w, IndexSubset j) {
  Integer prod = 1, l = 1;
  for (int i = 1; i <= 3; ++i)
    if (j.contains(i)) {
      prod *= w[i];
      l = lcm(l, w[i]);
    }
  return prod / l;
}

}  // namespace detail

/// kappa(I) = sum over J subset of I of (-1)^(|J|-|I|) prod(w_J)/lcm(w_J).
inline Integer kappa(const BrieskornWeights& w, IndexSubset subset) {
  Integer total = 0;
  for (unsigned m = 0; m < 8; ++m) {
    IndexSubset j = IndexSubset::from_mask(m);
    if (!j.is_subset_of(subset)) continue;
    Integer term = detail::product_over_lcm(w, j);
    if ((subset.size() - j.size()) % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

/// kappa restricted to even-cardinality subsets, zero otherwise.
inline Integer kappa_prime(const BrieskornWeights& w, IndexSubset subset) {
  return subset.size() % 2 == 0 ? kappa(w, subset) : Integer(0);
}

/// c(I) = gcd(weights outside I) / prod over proper subsets J of I of c(J).
/// c(empty) = gcd(w1, w2, w3), which is 1 for every torus-knot cover Sigma(2, q, m)
/// with q odd; the gcd keeps the quotients integral when all three weights
/// share a factor (Sigma(2,2,2) = RP^3). Only defined for |I| <= 2: the full
/// index set has no complementary weights.
inline Integer c_value(const BrieskornWeights& w, IndexSubset subset) {
  if (subset.size() == 0) return gcd(gcd(w[1], w[2]), w[3]);
  if (subset == IndexSubset::all())
    throw std::domain_error("c({1,2,3}) would need the gcd of an empty weight set");
  Integer g = 0;
  for (int i = 1; i <= 3; ++i)
    if (!subset.contains(i)) g = gcd(g, w[i]);
  Integer denom = 1;
  for (unsigned m = 0; m < 8; ++m) {
    IndexSubset j = IndexSubset::from_mask(m);
    if (j.is_subset_of(subset) && j != subset) denom *= c_value(w, j);
  }
  if (g % denom != 0)
    throw std::logic_error("c" + subset.to_string() + " for weights " + w.to_string() + " is not integral: " + g.str() +
                           "/" + denom.str());
  return g / denom;
}

/// Intermediate quantities of the rank/torsion computation, kept for reporting.
struct OrlikData {
  std::array<Integer, 8> kappa;        // indexed by subset mask
  std::array<Integer, 8> kappa_prime;  // indexed by subset mask
  Integer rank;                        // kappa({1,2,3})
  Integer r;                           // max over all I of kappa(I)
  Integer max_kappa_prime;
  /// Runs of equal d_j: (d, number of consecutive j with d_j = d), for j = 1..r.
  std::vector<std::pair<Integer, Integer>> d_runs;
  /// True when the literal r exceeds every kappa'(I); the excess d_j are empty products.
  bool r_exceeds_even_support = false;
};

inline OrlikData orlik_data(const BrieskornWeights& w) {
  OrlikData out;
  for (unsigned m = 0; m < 8; ++m) {
    auto s = IndexSubset::from_mask(m);
    out.kappa[m] = kappa(w, s);
    out.kappa_prime[m] = kappa_prime(w, s);
  }
  out.rank = out.kappa[7];
  if (out.rank < 0) throw std::logic_error("negative rank for weights " + w.to_string());
  out.r = *std::max_element(out.kappa.begin(), out.kappa.end());
  out.max_kappa_prime = *std::max_element(out.kappa_prime.begin(), out.kappa_prime.end());
  out.r_exceeds_even_support = out.r > out.max_kappa_prime;

  // d_j is constant for j between consecutive distinct positive kappa' values.
  std::vector<Integer> thresholds;
  for (const auto& k : out.kappa_prime)
    if (k > 0) thresholds.push_back(k);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  Integer previous = 0;
  for (const Integer& t : thresholds) {
    if (previous >= out.r) break;
    Integer upto = t < out.r ? t : out.r;
    Integer d = 1;
    for (unsigned m = 0; m < 8; ++m)
      if (out.kappa_prime[m] >= t) d *= c_value(w, IndexSubset::from_mask(m));
    out.d_runs.emplace_back(d, upto - previous);
    previous = upto;
  }
  if (previous < out.r) out.d_runs.emplace_back(Integer(1), out.r - previous);
  return out;
}

/// H_1(Sigma(w1, w2, w3); Z).
inline FiniteAbelianGroup homology(const BrieskornWeights& w) {
  OrlikData data = orlik_data(w);
  FiniteAbelianGroup g = FiniteAbelianGroup::free(to_u64(data.rank, "rank"));
  for (const auto& [d, count] : data.d_runs)
    if (d > 1) g = direct_sum(g, FiniteAbelianGroup::cyclic(d, to_u64(count, "torsion multiplicity")));
  return g;
}

}  // namespace knotgraph
