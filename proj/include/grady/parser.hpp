#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "grady/polynomial.hpp"

namespace grady {

namespace detail {

// Recursive descent over
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' natural)?
//   base   := number | variable | '(' expr ')'
//   number := digits ('/' digits)?
template <class F>
class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const RingPtr<F>& ring) : text_(text), ring_(ring) {}

  Polynomial<F> parse() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty expression");
    Polynomial<F> p = expr();
    skip_space();
    if (!at_end()) {
      if (peek() == ')') throw ParseError(pos_, "unbalanced parentheses: unexpected ')'");
      throw ParseError(pos_, std::string("unexpected character '") + peek() + "'");
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (!at_end() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<F> expr() {
    bool negate = accept('-');
    Polynomial<F> acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial<F> factor() {
    Polynomial<F> b = base();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      std::string digits = read_digits();
      if (digits.empty()) throw ParseError(start, "malformed exponent: expected a natural number");
      if (digits.size() > 6) throw ParseError(start, "malformed exponent: too large");
      b = b.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  Polynomial<F> base() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "unexpected end of input");
    char c = peek();
    if (c == '(') {
      std::size_t open = pos_++;
      Polynomial<F> inner = expr();
      if (!accept(')')) throw ParseError(open, "unbalanced parentheses: '(' is never closed");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      mpz_class num(read_digits());
      if (!at_end() && peek() == '/') {
        ++pos_;
        std::string den = read_digits();
        if (den.empty()) throw ParseError(pos_, "malformed rational literal");
        mpz_class d(den);
        if (d == 0) throw ParseError(start, "zero denominator");
        return Polynomial<F>::constant(ring_, ring_->field().from_fraction(num, d));
      }
      return Polynomial<F>::constant(ring_, ring_->field().from_integer(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError(start, "unknown variable '" + std::string(name) + "'");
      return Polynomial<F>::variable(ring_, *idx);
    }
    if (c == ')') throw ParseError(pos_, "unbalanced parentheses: unexpected ')'");
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  const RingPtr<F>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `text` into the canonical polynomial it denotes in `ring`.
template <class F>
Polynomial<F> parse_polynomial(std::string_view text, const RingPtr<F>& ring) {
  return detail::PolynomialParser<F>(text, ring).parse();
}

}  // namespace grady
