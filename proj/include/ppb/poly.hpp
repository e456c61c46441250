#pragma once

#include <span>
#include <string>
#include <vector>

#include "ppb/arith.hpp"

namespace ppb {

/// Dense univariate polynomial over Q, coefficients from the constant term up.
/// Trailing zero coefficients are always trimmed; the zero polynomial has no
/// coefficients and degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  /// The polynomial z.
  static UPoly identity();

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of z^i (zero beyond the degree).
  Rational coeff(long i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& x) const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& c, const UPoly& a);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// this(inner(z)).
  UPoly compose(const UPoly& inner) const;
  /// this(z + b).
  UPoly shift(const Rational& b) const;

  /// Euclidean division; throws ArgumentError for a zero divisor.
  struct DivMod;
  DivMod divmod(const UPoly& divisor) const;
  /// Division known to be exact; throws InternalError on a nonzero remainder.
  UPoly exact_div(const UPoly& divisor) const;

  /// Multiplicity of the root z = 0 (number of vanishing low coefficients).
  long zero_root_multiplicity() const;
  /// this / z^k with k = zero_root_multiplicity().
  UPoly strip_zero_roots() const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct UPoly::DivMod {
  UPoly quotient;
  UPoly remainder;
};

/// A polynomial map phi in Q[z] of degree d >= 2.
class Polynomial {
 public:
  /// Throws ArgumentError if the degree is below 2.
  explicit Polynomial(UPoly p);
  explicit Polynomial(std::vector<Rational> coeffs) : Polynomial(UPoly(std::move(coeffs))) {}

  long degree() const { return poly_.degree(); }
  const Rational& leading() const { return poly_.leading(); }
  Rational coeff(long i) const { return poly_.coeff(i); }
  const std::vector<Rational>& coeffs() const { return poly_.coeffs(); }
  const UPoly& poly() const { return poly_; }

  Rational operator()(const Rational& x) const { return poly_(x); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.poly_ == b.poly_; }

  /// h^{-1} o phi o h for h(z) = alpha z + beta, alpha != 0.
  Polynomial conjugate_affine(const Rational& alpha, const Rational& beta) const;

  /// If phi = z^2 + c, returns true and writes c.
  bool is_quadratic_family(Rational* c = nullptr) const;

  std::string to_string() const { return poly_.to_string("z"); }

 private:
  UPoly poly_;
};

}  // namespace ppb
