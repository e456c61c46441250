#pragma once

// Explicit upper bound on the number of rational preperiodic points of a
// degree-d polynomial over a global field, from the number s of bad places.
//
// Real-valued quantities are carried as upper bounds: every transcendental
// step is rounded away from the side that could undercount.

#include <string>
#include <variant>

#include "ppb/arith.hpp"
#include "ppb/real.hpp"
#include "ppb/reduction.hpp"

namespace ppb::bound {

struct NumberField {
  long D;  // [K:Q] >= 1
};
struct FunctionField {
  long q;  // smallest residue field size >= 2
};
using FieldKind = std::variant<NumberField, FunctionField>;

/// Inputs to the bound. Validated on construction (ArgumentError).
struct BoundInput {
  long d;
  FieldKind field;
  long s;
  long s_inf;

  BoundInput(long d, FieldKind field, long s, long s_inf);
  static BoundInput over_Q(long d, long s) { return BoundInput(d, NumberField{1}, s, 1); }

  bool is_number_field() const { return std::holds_alternative<NumberField>(field); }
  long D() const;  // 0 for function fields
};

enum class Row { FunctionFieldS0, ArchOnly, SmallT, General };
std::string to_string(Row r);

struct BoundReport {
  Rational sigma;  // exact; only meaningful for number fields
  long beta;
  Real t;
  Row row;
  Real M;  // upward-rounded bound value
  Integer count_bound;  // ceil(M) + 1, counting the point at infinity
  bool flagged;  // t <= 0 outside the first two rows (malformed input)
};

/// 7 for d = 2, else 2 * 33^{(d-1)(d-2)} / ((d-1)(d-2)), exactly.
Rational sigma_of(long d);

/// 9 (number field, s <= sigma D, d = 2); max(11, 2d) (number field,
/// s <= sigma D, d >= 3); 1 otherwise.
long beta_of(const BoundInput& in, const Rational& sigma);

/// s - s_inf (number field, s <= sigma D); s + D log d / (2 log 2) (number
/// field, s > sigma D, rounded up); s (function field).
Real t_of(const BoundInput& in);

BoundReport theorem_bound(const BoundInput& in);

/// Bound for Q and d = 2 in the main case: 5 for s = 1, otherwise
/// (2s+1)[log2(2s+1) + log2(log2(2s+1) - 1) + 2], rounded up. s >= 1.
Real quadratic_refined_bound(long s);

/// C_d = d^{-(d-2)/(d-1)}.
Real C_of(long d);

/// Sufficient lower bounds for the main proof case.
struct Case1Thresholds {
  Real R_min;      // every place: R_w >= 4 over number fields
  Real arch_CR;    // archimedean: C_d r >= 4 (d = 2) or 4 + sqrt(3) (d >= 3)
  Real arch_r;     // the same on r itself: arch_CR / C_d
};
Case1Thresholds case1_threshold(long d);

/// Which proof case a concrete phi over Q falls into.
struct CaseReport {
  int proof_case;            // 1, 2 (d = 2) or 3 (d >= 3)
  bool case1_certified;      // case 1 established from exact radii
  std::string witness;       // place realizing max R_w, when certified
  std::string note;
};
CaseReport classify_case(const Polynomial& phi, const reduction::BadPrimeCensus& census);

}  // namespace ppb::bound
