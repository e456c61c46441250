#pragma once

// Multi-precision reals on top of MPFR, with explicit rounding direction so
// upper bounds can be carried through a computation.

#include <mpfr.h>

#include <string>

#include "ppb/arith.hpp"

namespace ppb {

enum class Rounding { Nearest, Up, Down };

/// Fractional bits requested through PPB_PRECISION (default and minimum 128).
/// Read once per process.
long configured_precision();

/// Bits actually used for intermediate work: configured_precision() + 64.
mpfr_prec_t working_precision();

class Real {
 public:
  Real();
  explicit Real(long v);
  Real(const Rational& q, Rounding rnd = Rounding::Nearest);
  Real(const Integer& z, Rounding rnd = Rounding::Nearest);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  static Real add(const Real& a, const Real& b, Rounding rnd = Rounding::Nearest);
  static Real sub(const Real& a, const Real& b, Rounding rnd = Rounding::Nearest);
  static Real mul(const Real& a, const Real& b, Rounding rnd = Rounding::Nearest);
  static Real div(const Real& a, const Real& b, Rounding rnd = Rounding::Nearest);

  friend Real operator+(const Real& a, const Real& b) { return add(a, b); }
  friend Real operator-(const Real& a, const Real& b) { return sub(a, b); }
  friend Real operator*(const Real& a, const Real& b) { return mul(a, b); }
  friend Real operator/(const Real& a, const Real& b) { return div(a, b); }
  Real operator-() const;

  friend int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.value_, b.value_); }
  friend bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return cmp(a, b) == 0; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Smallest integer >= value.
  Integer ceil() const;

  /// Decimal string with `digits` significant digits (default: enough for the
  /// configured precision).
  std::string to_string(int digits = 0) const;

 private:
  mpfr_t value_;
};

Real log(const Real& x, Rounding rnd = Rounding::Nearest);
Real log2(const Real& x, Rounding rnd = Rounding::Nearest);
Real sqrt(const Real& x, Rounding rnd = Rounding::Nearest);
Real exp(const Real& x, Rounding rnd = Rounding::Nearest);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

/// log_base(x); Up/Down give a rigorous directed bound for x >= 1.
Real log_base(const Real& x, long base, Rounding rnd = Rounding::Nearest);

/// Decimal digits corresponding to configured_precision().
int configured_decimal_digits();

}  // namespace ppb
