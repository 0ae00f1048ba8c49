#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knotgraph {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// Smallest integer >= q.
inline Integer ceil(const Rational& q) {
  Integer num = numerator_of(q);
  Integer den = denominator_of(q);
  Integer quot = num / den;  // truncates toward zero
  if (num % den != 0 && num > 0) ++quot;
  return quot;
}

/// Largest integer <= q.
inline Integer floor(const Rational& q) {
  Integer num = numerator_of(q);
  Integer den = denominator_of(q);
  Integer quot = num / den;
  if (num % den != 0 && num < 0) --quot;
  return quot;
}

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }
inline Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
inline Integer lcm(const Integer& a, const Integer& b) { return boost::multiprecision::lcm(a, b); }

/// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline std::string to_string(const Integer& x) { return x.str(); }

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text or q = 0.
inline Rational parse_rational(std::string_view text) {
  auto digits_only = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits_only(num) || !digits_only(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n.front() == '+') n.erase(0, 1);
  Integer p(n), q{std::string(den)};
  if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  // Deterministic trial division for small n, probabilistic above.
  if (n < Integer(1) << 40) {
    for (std::uint64_t d = 3; Integer(d) * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }
  return boost::multiprecision::miller_rabin_test(n, 40);
}

inline std::uint64_t to_u64(const Integer& x, std::string_view what) {
  if (x < 0 || x > std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error(std::string(what) + " out of range: " + x.str());
  return static_cast<std::uint64_t>(x);
}

}  // namespace knotgraph
