#include "ppb/parse.hpp"

#include <cctype>

namespace ppb::cli {

namespace {

constexpr long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  UPoly parse() {
    skip();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    UPoly p = expr();
    skip();
    if (!at_end()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() {
    skip();
    return at_end() ? '\0' : s_[pos_];
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  UPoly expr() {
    UPoly acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  static bool starts_factor(char c) {
    return c == '(' || c == 'z' || std::isdigit(static_cast<unsigned char>(c));
  }

  UPoly term() {
    UPoly acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (starts_factor(peek())) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  UPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  UPoly power() {
    UPoly base = primary();
    if (!eat('^')) return base;
    const std::size_t at = pos_;
    const Integer e = integer();
    if (e > kMaxExponent) throw ParseError("exponent too large", at);
    UPoly r = UPoly::constant(1);
    for (long i = 0; i < e.get_si(); ++i) r = r * base;
    return r;
  }

  UPoly primary() {
    const char c = peek();
    if (c == 'z') {
      ++pos_;
      return UPoly::identity();
    }
    if (c == '(') {
      ++pos_;
      UPoly inner = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const Integer num = integer();
      if (eat('/')) {
        const std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError("expected integer denominator", pos_);
        const Integer den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
        return UPoly::constant(make_rational(num, den));
      }
      return UPoly::constant(Rational(num));
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

UPoly parse_upoly(std::string_view text) { return Parser(text).parse(); }

Polynomial parse_poly(std::string_view text) {
  UPoly p = parse_upoly(text);
  if (p.degree() < 2)
    throw ParseError("polynomial must have degree >= 2 (got " + std::to_string(p.degree()) + ")", 0);
  return Polynomial(std::move(p));
}

Rational parse_rational(std::string_view text) {
  const UPoly p = parse_upoly(text);
  if (p.degree() > 0) throw ParseError("expected a rational number", 0);
  return p.coeff(0);
}

std::string render(const Polynomial& p) { return p.to_string(); }

}  // namespace ppb::cli
