#pragma once

// Pairwise-difference products of point sets in a filled Julia set, checked
// against the bound
//   prod_{i != j} |x_i - x_j|_v <= |a_d|_v^{-N(N-1)/(d-1)} max{1, |N|_v^N} r_v^{E(N,d)}.
// Finite places are compared exactly in exponent form. At the archimedean
// place r_v is taken from the radius of a disk known to contain the filled
// Julia set (exact for z^2 + c with c <= 0); any such disk yields a valid
// instance of the bound. Both comparisons are exact; the natural-log margin
// is reported alongside.

#include <optional>
#include <span>
#include <variant>

#include "ppb/arith.hpp"
#include "ppb/poly.hpp"
#include "ppb/real.hpp"
#include "ppb/reduction.hpp"

namespace ppb::capacity {

/// Exact product over ordered pairs i != j: a rational at the archimedean
/// place, p^e at a finite place. Needs N >= 2 distinct points.
AbsValue pairwise_product(std::span<const Rational> points, const Place& v);

struct ProductBoundCheck {
  Place place;
  std::size_t N;
  std::optional<LogAbs> lhs_exact;  // finite places
  std::optional<LogAbs> rhs_exact;
  Real lhs_log;  // natural logs, every place
  Real rhs_log;
  Real margin;   // rhs_log - lhs_log, exactly 0 on equality
  bool holds;
};

/// Checks the bound at v for preperiodic (hence filled-Julia-set) points.
ProductBoundCheck check_capbd(const Polynomial& phi, std::span<const Rational> points, const Place& v);

/// Same, reusing a radius report for the finite place.
ProductBoundCheck check_capbd(const Polynomial& phi, std::span<const Rational> points,
                              const reduction::PlaceReport& report);

/// prod over all places of pairwise_product equals 1 exactly.
bool global_product_is_one(std::span<const Rational> points);

}  // namespace ppb::capacity
