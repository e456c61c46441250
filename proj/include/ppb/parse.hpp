#pragma once

// Polynomial input grammar (whitespace is ignored):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*'? unary)*          implicit product: 3z^2, (1/25)z
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' integer)?
//   primary := integer ('/' integer)? | 'z' | '(' expr ')'

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ppb/poly.hpp"

namespace ppb::cli {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses any polynomial in z (no degree restriction).
UPoly parse_upoly(std::string_view text);

/// Parses a polynomial map; degree < 2 raises ParseError at position 0.
Polynomial parse_poly(std::string_view text);

/// Parses "a", "-a/b" etc. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text form; parse_poly(render(p)) == p.
std::string render(const Polynomial& p);

}  // namespace ppb::cli
