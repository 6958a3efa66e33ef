#pragma once

// Small recursive-descent helpers shared by the ring, element and polynomial parsers.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zdiv/error.hpp"

namespace zdiv::detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text, std::size_t base_offset = 0)
      : text_(text), base_(base_offset) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void expect(std::string_view word) {
    if (!accept(word)) fail("expected '" + std::string(word) + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::uint64_t parse_uint() {
    if (!at_digit()) fail("expected a number");
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (1ULL << 40)) fail("number too large");
      ++pos_;
    }
    return value;
  }

  /// Returns the raw text up to (not including) the bracket matching the one just consumed.
  std::string_view until_matching(char open, char close) {
    std::size_t depth = 1;
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == open) ++depth;
      if (c == close && --depth == 0) return text_.substr(start, pos_++ - start);
      ++pos_;
    }
    fail(std::string("unbalanced '") + open + "'");
  }

  std::size_t offset() const { return base_ + pos_; }
  std::size_t pos() const { return pos_; }
  std::string_view text() const { return text_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, offset()); }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

/// Parses `c_k x^k + ... + c_0` with integer coefficients. Index = degree.
/// The variable is `var`; `*` between coefficient and variable is optional.
inline std::vector<long long> parse_integer_poly(Cursor& cur, char var = 'x') {
  std::vector<long long> coeffs;
  bool first = true;
  while (true) {
    long long sign = 1;
    if (cur.accept('-')) {
      sign = -1;
    } else if (!first && !cur.accept('+')) {
      break;
    }
    first = false;
    long long coef = 1;
    bool have_coef = false;
    if (cur.at_digit()) {
      coef = static_cast<long long>(cur.parse_uint());
      have_coef = true;
      cur.accept('*');
    }
    std::size_t degree = 0;
    if (cur.accept(var)) {
      degree = 1;
      if (cur.accept('^')) degree = static_cast<std::size_t>(cur.parse_uint());
    } else if (!have_coef) {
      cur.fail(std::string("expected a coefficient or '") + var + "'");
    }
    if (degree > 64) cur.fail("degree too large");
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
    coeffs[degree] += sign * coef;
  }
  return coeffs;
}

}  // namespace zdiv::detail
