#include "ppb/poly.hpp"

#include <algorithm>

namespace ppb {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }
UPoly UPoly::identity() { return UPoly({Rational(0), Rational(1)}); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UPoly::coeff(long i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& UPoly::leading() const {
  if (coeffs_.empty()) throw ArgumentError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
  }
  return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(out));
}

UPoly operator*(const Rational& c, const UPoly& a) {
  std::vector<Rational> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return UPoly(std::move(out));
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

UPoly UPoly::shift(const Rational& b) const { return compose(UPoly({b, Rational(1)})); }

UPoly::DivMod UPoly::divmod(const UPoly& divisor) const {
  if (divisor.is_zero()) throw ArgumentError("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const long dd = divisor.degree();
  const long nd = degree();
  if (nd < dd) return {UPoly(), *this};
  std::vector<Rational> quo(static_cast<std::size_t>(nd - dd + 1));
  const Rational& lead = divisor.leading();
  for (long k = nd - dd; k >= 0; --k) {
    Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quo[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (long j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::exact_div(const UPoly& divisor) const {
  auto qr = divmod(divisor);
  if (!qr.remainder.is_zero()) throw InternalError("inexact polynomial division");
  return qr.quotient;
}

long UPoly::zero_root_multiplicity() const {
  long k = 0;
  while (k <= degree() && coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

UPoly UPoly::strip_zero_roots() const {
  const long k = zero_root_multiplicity();
  return UPoly(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational a = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = (a == 1);
    if (i == 0 || !unit) {
      if (a.get_den() != 1 && i > 0)
        out += "(" + a.get_str() + ")";
      else
        out += a.get_str();
    }
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Polynomial::Polynomial(UPoly p) : poly_(std::move(p)) {
  if (poly_.degree() < 2)
    throw ArgumentError("polynomial map must have degree >= 2 (got " +
                        std::to_string(poly_.degree()) + ")");
}

Polynomial Polynomial::conjugate_affine(const Rational& alpha, const Rational& beta) const {
  if (alpha == 0) throw ArgumentError("affine conjugation needs alpha != 0");
  const UPoly h({beta, alpha});
  const UPoly inner = poly_.compose(h) - UPoly::constant(beta);
  return Polynomial(Rational(1) / alpha * inner);
}

bool Polynomial::is_quadratic_family(Rational* c) const {
  if (degree() != 2 || leading() != 1 || coeff(1) != 0) return false;
  if (c) *c = coeff(0);
  return true;
}

}  // namespace ppb
