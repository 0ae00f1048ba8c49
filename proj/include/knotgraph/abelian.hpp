#pragma once

#include "knotgraph/numeric.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotgraph {

namespace detail {

inline Integer pollard_brent(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (Integer c = 1;; ++c) {
    Integer y = 2, x = 2, g = 1, q = 1, ys;
    auto step = [&](const Integer& v) { return Integer((v * v + c) % n); };
    std::uint64_t r = 1;
    const std::uint64_t block = 64;
    while (g == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = step(y);
      std::uint64_t k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(block, r - k); ++i) {
          y = step(y);
          q = (q * abs(Integer(x - y))) % n;
        }
        g = gcd(q, n);
        k += block;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    while (n % p == 0) {
      ++out[Integer(p)];
      n /= p;
    }
  }
  // Wheel trial division over small factors first.
  for (std::uint64_t d = 7; d < (1u << 16) && Integer(d) * d <= n; d += 2) {
    while (n % d == 0) {
      ++out[Integer(d)];
      n /= d;
    }
  }
  if (n == 1) return;
  std::vector<Integer> stack{n};
  while (!stack.empty()) {
    Integer m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_prime(m)) {
      ++out[m];
      continue;
    }
    Integer f = pollard_brent(m);
    stack.push_back(f);
    stack.push_back(m / f);
  }
}

}  // namespace detail

/// Prime factorisation of n >= 1 as (prime -> exponent).
inline std::map<Integer, unsigned> factorize(const Integer& n) {
  if (n < 1) throw std::invalid_argument("factorize: expected a positive integer, got " + n.str());
  std::map<Integer, unsigned> out;
  detail::factor_into(n, out);
  return out;
}

/// A finitely generated abelian group Z^r (+) torsion, stored in primary
/// decomposition: the torsion part is a multiset of prime powers p^e (e >= 1)
/// kept sorted by (p, e), each with a multiplicity.
class FiniteAbelianGroup {
 public:
  struct PrimaryFactor {
    Integer prime;
    unsigned exponent = 1;
    std::uint64_t multiplicity = 1;

    Integer order() const { return boost::multiprecision::pow(prime, exponent); }
    friend bool operator==(const PrimaryFactor&, const PrimaryFactor&) = default;
  };

  FiniteAbelianGroup() = default;

  FiniteAbelianGroup(std::uint64_t free_rank, std::span<const Integer> cyclic_orders) : free_rank_(free_rank) {
    for (const Integer& order : cyclic_orders) add_cyclic(order, 1);
    normalize();
  }

  FiniteAbelianGroup(std::uint64_t free_rank, std::initializer_list<Integer> cyclic_orders)
      : FiniteAbelianGroup(free_rank, std::span<const Integer>(cyclic_orders.begin(), cyclic_orders.size())) {}

  static FiniteAbelianGroup trivial() { return {}; }

  static FiniteAbelianGroup free(std::uint64_t rank) {
    FiniteAbelianGroup g;
    g.free_rank_ = rank;
    return g;
  }

  /// (Z_order)^copies; order 1 gives the trivial group.
  static FiniteAbelianGroup cyclic(const Integer& order, std::uint64_t copies = 1) {
    FiniteAbelianGroup g;
    g.add_cyclic(order, copies);
    g.normalize();
    return g;
  }

  std::uint64_t free_rank() const { return free_rank_; }
  const std::vector<PrimaryFactor>& torsion() const { return torsion_; }

  /// Torsion prime powers, one entry per cyclic summand (expanded multiset).
  std::vector<Integer> torsion_orders() const {
    std::vector<Integer> out;
    for (const auto& f : torsion_)
      for (std::uint64_t i = 0; i < f.multiplicity; ++i) out.push_back(f.order());
    return out;
  }

  Integer torsion_order() const {
    Integer n = 1;
    for (const auto& f : torsion_) n *= boost::multiprecision::pow(f.order(), static_cast<unsigned>(f.multiplicity));
    return n;
  }

  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }

  /// Invariant factors d_1 | d_2 | ... | d_s of the torsion part (all > 1).
  std::vector<Integer> invariant_factors() const {
    // Per prime, exponents in descending order; the i-th largest of each prime
    // goes into the i-th largest invariant factor.
    std::map<Integer, std::vector<unsigned>> by_prime;
    for (const auto& f : torsion_)
      for (std::uint64_t i = 0; i < f.multiplicity; ++i) by_prime[f.prime].push_back(f.exponent);
    std::size_t count = 0;
    for (auto& [p, exps] : by_prime) {
      std::sort(exps.rbegin(), exps.rend());
      count = std::max(count, exps.size());
    }
    std::vector<Integer> factors(count, Integer(1));
    for (const auto& [p, exps] : by_prime)
      for (std::size_t i = 0; i < exps.size(); ++i) factors[count - 1 - i] *= boost::multiprecision::pow(p, exps[i]);
    return factors;
  }

  /// "0", "Z", "Z^2 + (Z_3)^2 + Z_5", ...
  std::string to_string() const {
    if (is_trivial()) return "0";
    std::vector<std::string> parts;
    if (free_rank_ == 1) parts.push_back("Z");
    if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
    for (const auto& f : torsion_) {
      std::string z = "Z_" + f.order().str();
      parts.push_back(f.multiplicity == 1 ? z : "(" + z + ")^" + std::to_string(f.multiplicity));
    }
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
  }

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

  friend FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& a, const FiniteAbelianGroup& b) {
    FiniteAbelianGroup out = a;
    out.free_rank_ += b.free_rank_;
    out.torsion_.insert(out.torsion_.end(), b.torsion_.begin(), b.torsion_.end());
    out.normalize();
    return out;
  }

  /// g^copies (copies-fold direct sum).
  friend FiniteAbelianGroup repeat(const FiniteAbelianGroup& g, std::uint64_t copies) {
    FiniteAbelianGroup out;
    if (copies == 0) return out;
    out.free_rank_ = g.free_rank_ * copies;
    out.torsion_ = g.torsion_;
    for (auto& f : out.torsion_) f.multiplicity *= copies;
    return out;
  }

 private:
  void add_cyclic(const Integer& order, std::uint64_t copies) {
    if (order < 1) throw std::invalid_argument("cyclic summand order must be >= 1, got " + order.str());
    if (copies == 0) return;
    for (const auto& [p, e] : factorize(order)) torsion_.push_back({p, e, copies});
  }

  void normalize() {
    std::sort(torsion_.begin(), torsion_.end(), [](const PrimaryFactor& x, const PrimaryFactor& y) {
      return x.prime != y.prime ? x.prime < y.prime : x.exponent < y.exponent;
    });
    std::vector<PrimaryFactor> merged;
    for (const auto& f : torsion_) {
      if (f.multiplicity == 0) continue;
      if (!merged.empty() && merged.back().prime == f.prime && merged.back().exponent == f.exponent)
        merged.back().multiplicity += f.multiplicity;
      else
        merged.push_back(f);
    }
    torsion_ = std::move(merged);
  }

  std::uint64_t free_rank_ = 0;
  std::vector<PrimaryFactor> torsion_;
};

/// dim_{F_p} (G tensor F_p): free rank plus the number of p-primary summands.
inline std::uint64_t mod_p_dimension(const FiniteAbelianGroup& g, const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("mod_p_dimension: " + p.str() + " is not prime");
  std::uint64_t dim = g.free_rank();
  for (const auto& f : g.torsion())
    if (f.prime == p) dim += f.multiplicity;
  return dim;
}

/// Minimal number of generators: free rank plus the largest per-prime count of
/// primary summands.
inline std::uint64_t min_generators(const FiniteAbelianGroup& g) {
  std::uint64_t best = 0;
  std::uint64_t run = 0;
  const Integer* prime = nullptr;
  for (const auto& f : g.torsion()) {
    if (prime == nullptr || *prime != f.prime) {
      run = 0;
      prime = &f.prime;
    }
    run += f.multiplicity;
    best = std::max(best, run);
  }
  return g.free_rank() + best;
}

/// Parses the text form accepted in atlas files: "0", or terms joined by '+'
/// where a term is "Z", "Z^r", "Z_n" or "(Z_n)^k". Whitespace is ignored.
inline FiniteAbelianGroup parse_group(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("malformed group '" + std::string(text) + "': " + why);
  };
  if (s.empty()) fail("empty");
  if (s == "0") return {};
  auto parse_count = [&](std::string_view digits) -> Integer {
    if (digits.empty()) fail("missing number");
    for (char c : digits)
      if (c < '0' || c > '9') fail("expected digits, got '" + std::string(digits) + "'");
    return Integer(std::string(digits));
  };
  FiniteAbelianGroup out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t plus = s.find('+', pos);
    std::string_view term = std::string_view(s).substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    if (term == "Z") {
      out = direct_sum(out, FiniteAbelianGroup::free(1));
    } else if (term.starts_with("Z^")) {
      out = direct_sum(out, FiniteAbelianGroup::free(to_u64(parse_count(term.substr(2)), "rank")));
    } else if (term.starts_with("Z_")) {
      out = direct_sum(out, FiniteAbelianGroup::cyclic(parse_count(term.substr(2))));
    } else if (term.starts_with("(Z_")) {
      auto close = term.find(")^");
      if (close == std::string_view::npos) fail("expected ')^' in '" + std::string(term) + "'");
      Integer order = parse_count(term.substr(3, close - 3));
      auto copies = to_u64(parse_count(term.substr(close + 2)), "multiplicity");
      out = direct_sum(out, FiniteAbelianGroup::cyclic(order, copies));
    } else {
      fail("unrecognised term '" + std::string(term) + "'");
    }
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return out;
}

}  // namespace knotgraph
