#pragma once

#include "knotgraph/knots.hpp"

#include <cctype>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace knotgraph {

/// Syntax or semantic error in a knot expression, with the byte offset it was
/// detected at and the tokens that would have been accepted there.
class KnotParseError : public std::invalid_argument {
 public:
  KnotParseError(std::size_t offset, std::vector<std::string> expected, const std::string& message)
      : std::invalid_argument(format(offset, expected, message)), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(std::size_t offset, const std::vector<std::string>& expected, const std::string& message) {
    std::string s = "at byte " + std::to_string(offset) + ": " + message;
    if (!expected.empty()) {
      s += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) s += (i ? ", " : "") + expected[i];
      s += ")";
    }
    return s;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

namespace detail {

// knot-expr := term ("+" term)*
// term      := [count "*"] atom
// atom      := "T(" int "," int ")" | "m(" atom ")" | "r(" atom ")" | "U" | name
class KnotExpressionParser {
 public:
  KnotExpressionParser(std::string_view text, const KnotAtlas& atlas) : text_(text), atlas_(atlas) {}

  FormalKnot parse() {
    FormalKnot k = term();
    while (skip_ws(), peek() == '+') {
      ++pos_;
      k = connected_sum(k, term());
    }
    skip_ws();
    if (pos_ != text_.size()) fail({"'+'", "end of input"}, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return k;
  }

 private:
  inline static const std::vector<std::string> kAtomStart{"'T('", "'m('", "'r('", "'U'", "knot name"};

  FormalKnot term() {
    skip_ws();
    std::uint64_t count = 1;
    if (std::isdigit(static_cast<unsigned char>(peek())) && !word_is_name()) {
      std::size_t start = pos_;
      std::string digits = word();
      Integer n(digits);
      if (n < 1) fail_at(start, {"positive count"}, "count must be positive");
      if (n > std::numeric_limits<std::uint32_t>::max()) fail_at(start, {"count < 2^32"}, "count too large");
      count = static_cast<std::uint64_t>(n);
      skip_ws();
      expect('*', {"'*'"});
    }
    return repeat(atom(), count);
  }

  FormalKnot atom() {
    skip_ws();
    std::size_t start = pos_;
    if (!is_word_char(peek())) fail(kAtomStart, peek() == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, peek()) + "'");
    std::string w = word();
    skip_ws();
    if ((w == "T" || w == "m" || w == "r") && peek() == '(') {
      ++pos_;
      if (w == "T") {
        std::int64_t p = signed_int();
        skip_ws();
        expect(',', {"','"});
        std::int64_t q = signed_int();
        skip_ws();
        expect(')', {"')'"});
        try {
          return FormalKnot(GeneratorKnot::torus(p, q));
        } catch (const std::invalid_argument& e) {
          fail_at(start, {}, e.what());
        }
      }
      FormalKnot inner = atom();
      skip_ws();
      expect(')', {"')'"});
      return w == "m" ? mirror(inner) : reverse_only(inner);
    }
    if (w == "U") return FormalKnot::unknot();
    if (w == "3_1") return FormalKnot::torus(2, 3);
    if (atlas_.find(w)) return FormalKnot::named(w);
    fail_at(start, kAtomStart, "unknown knot name '" + w + "'");
  }

  static FormalKnot reverse_only(const FormalKnot& k) {
    FormalKnot out;
    for (const auto& [g, c] : k.summands()) out.add(g.reverse(), c);
    return out;
  }

  std::int64_t signed_int() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail({"integer"}, "expected an integer");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(text_[pos_++]);
    Integer v(digits);
    if (v > Integer(1) << 31) fail_at(start, {"|integer| <= 2^31"}, "torus parameter too large");
    auto value = static_cast<std::int64_t>(v);
    return negative ? -value : value;
  }

  // A leading digit run followed by '_' is a name like 6_1, not a count.
  bool word_is_name() const {
    std::size_t i = pos_;
    while (i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]))) ++i;
    return i < text_.size() && (text_[i] == '_' || std::isalpha(static_cast<unsigned char>(text_[i])));
  }

  static bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string word() {
    std::string w;
    while (is_word_char(peek())) w.push_back(text_[pos_++]);
    return w;
  }

  void expect(char c, std::vector<std::string> what) {
    if (peek() != c) fail(std::move(what), peek() == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, peek()) + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(std::vector<std::string> expected, const std::string& message) const {
    throw KnotParseError(pos_, std::move(expected), message);
  }
  [[noreturn]] void fail_at(std::size_t at, std::vector<std::string> expected, const std::string& message) const {
    throw KnotParseError(at, std::move(expected), message);
  }

  std::string_view text_;
  const KnotAtlas& atlas_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a knot expression such as "2*T(2,9) + m(T(2,3)) + 6_1".
/// "3_1" is the trefoil T(2,3); "Wh" is D+(T(2,3),2); further names come from the atlas.
inline FormalKnot parse_knot(std::string_view text, const KnotAtlas& atlas = KnotAtlas::builtin()) {
  return detail::KnotExpressionParser(text, atlas).parse();
}

}  // namespace knotgraph
