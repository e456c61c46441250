#pragma once

#include <random>
#include <vector>

#include "ppb/arith.hpp"
#include "ppb/poly.hpp"

namespace ppb::test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240607);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// Nonzero rational with numerator and denominator up to `bound` in size.
inline Rational random_nonzero(long bound) {
  long n = 0;
  while (n == 0) n = uniform(-bound, bound);
  return make_rational(Integer(n), Integer(uniform(1, bound)));
}

/// z^2 + j/m^2 with small j and m.
inline Polynomial random_quadratic(long max_den = 12, long max_abs_c = 3) {
  const long m = uniform(1, max_den);
  const long j = uniform(-max_abs_c * m * m, m * m / 4);
  return Polynomial(std::vector<Rational>{make_rational(Integer(j), Integer(m * m)), Rational(0), Rational(1)});
}

}  // namespace ppb::test
