#pragma once

// Exact arithmetic over Q: rationals, primes, places, p-adic valuations and
// absolute values. Everything here is immutable and thread-safe.

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ppb {

using Integer = mpz_class;
using Rational = mpq_class;

/// Bad caller input (non-prime modulus, zero where nonzero is required, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation would exceed a documented size guard.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency assertion failed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Canonical rational num/den. Throws ArgumentError on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// "a" for integers, "a/b" otherwise (GMP canonical form).
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Deterministic Miller-Rabin. Exact for n < 3.3e24; larger inputs raise
/// SizeGuardError rather than returning a probabilistic answer.
bool is_prime(const Integer& n);

/// A rational prime, validated on construction.
class Prime {
 public:
  explicit Prime(const Integer& p);
  explicit Prime(long p) : Prime(Integer(p)) {}

  const Integer& value() const { return p_; }
  unsigned long as_ulong() const { return p_.get_ui(); }

  friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
  friend std::strong_ordering operator<=>(const Prime& a, const Prime& b) {
    int c = cmp(a.p_, b.p_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Integer p_;
};

/// A place of Q: the archimedean absolute value or a p-adic one.
class Place {
 public:
  static Place archimedean() { return Place(); }
  static Place finite(const Prime& p) { return Place(p); }

  bool is_archimedean() const { return !prime_.has_value(); }
  /// Throws ArgumentError for the archimedean place.
  const Prime& prime() const;
  std::string name() const;  // "inf" or the decimal prime

  friend bool operator==(const Place& a, const Place& b) { return a.prime_ == b.prime_; }

 private:
  Place() = default;
  explicit Place(const Prime& p) : prime_(p) {}
  std::optional<Prime> prime_;
};

/// v_p(x); the infinite valuation stands for x = 0.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(long v) : value_(v), infinite_(false) {}

  bool is_infinite() const { return infinite_; }
  /// Throws ArgumentError when infinite.
  long value() const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  Valuation() = default;
  long value_ = 0;
  bool infinite_ = true;
};

Valuation padic_valuation(const Rational& x, const Prime& p);
Valuation padic_valuation(const Integer& x, const Prime& p);
/// Finite valuation of a nonzero rational; throws ArgumentError on zero.
long valuation_nonzero(const Rational& x, const Prime& p);

/// The positive real p^exponent, an element of |C_p^x|. Products add
/// exponents; comparisons never leave exact arithmetic.
struct LogAbs {
  Prime base;
  Rational exponent;

  LogAbs(const Prime& p, const Rational& e) : base(p), exponent(e) {}

  /// Same base required.
  friend LogAbs operator*(const LogAbs& a, const LogAbs& b);
  friend bool operator==(const LogAbs& a, const LogAbs& b);
  std::string to_string() const;  // "p^(a/b)"
};

/// Exact total order on positive reals of the form p^a, q^b.
/// Returns <0, 0, >0. Cross-base comparison raises both sides to the common
/// denominator of the exponents and compares integer powers.
int compare(const LogAbs& a, const LogAbs& b);

using AbsValue = std::variant<Rational, LogAbs>;

/// |x|_v: an exact rational at the archimedean place, p^{-v_p(x)} otherwise.
/// For x = 0 at a finite place throws ArgumentError (|0|_p has no LogAbs form).
AbsValue abs_at(const Rational& x, const Place& v);

/// Checks |x|_inf * prod_{p | num*den} |x|_p == 1 exactly. x must be nonzero.
bool verify_product_formula(const Rational& x);

struct PrimePower {
  Integer prime;
  unsigned long exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division bound used by `factor`.
inline constexpr unsigned long kTrialDivisionLimit = 1UL << 20;

/// Trial division up to 2^20, then a deterministic primality (or prime
/// power) check on the remaining cofactor. Any other cofactor with no factor below the limit
/// raises SizeGuardError. Primes ascending; factor(1) is empty.
std::vector<PrimePower> factor(const Integer& n);

/// Distinct prime divisors of |n| for n != 0, ascending.
std::vector<Integer> prime_divisors(const Integer& n);

Integer pow(const Integer& base, unsigned long e);
/// Exact base^e for integer e of either sign.
Rational pow(const Rational& base, long e);

}  // namespace ppb
