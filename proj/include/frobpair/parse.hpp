#ifndef FROBPAIR_PARSE_HPP
#define FROBPAIR_PARSE_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "poly.hpp"

namespace frobpair {

namespace detail {

// expr   := term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := base ('^' uint)?
// base   := uint | ident | '(' expr ')'
class PolyParser {
public:
  PolyParser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  MultiPoly factor() {
    MultiPoly b = base();
    if (accept('^')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected exponent");
      b = poly_pow(b, exponent());
    }
    return b;
  }

  std::uint64_t exponent() {
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("exponent too large");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  MultiPoly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto& F = ring_.field();
      Coeff v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = F.add(F.mul(v, F.from_uint(10)), F.from_uint(static_cast<std::uint64_t>(text_[pos_] - '0')));
        ++pos_;
      }
      return MultiPoly::constant(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_.vars().index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      return MultiPoly::variable(ring_, *idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parses a polynomial expression; integer literals are reduced mod p.
inline MultiPoly parse_poly(std::string_view text, const Ring& ring) {
  return detail::PolyParser(text, ring).parse();
}

inline MultiPoly parse_poly(std::string_view text, const VarContext& vars, const PrimeField& field) {
  return parse_poly(text, Ring(field, vars));
}

} // namespace frobpair

#endif // FROBPAIR_PARSE_HPP
