#include "ppb/real.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace ppb {

namespace {

mpfr_rnd_t to_mpfr(Rounding r) {
  switch (r) {
    case Rounding::Up:
      return MPFR_RNDU;
    case Rounding::Down:
      return MPFR_RNDD;
    default:
      return MPFR_RNDN;
  }
}

Rounding flip(Rounding r) {
  if (r == Rounding::Up) return Rounding::Down;
  if (r == Rounding::Down) return Rounding::Up;
  return r;
}

}  // namespace

long configured_precision() {
  static const long bits = [] {
    long b = 128;
    if (const char* env = std::getenv("PPB_PRECISION")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && v > b) b = v;
    }
    return b;
  }();
  return bits;
}

mpfr_prec_t working_precision() { return static_cast<mpfr_prec_t>(configured_precision() + 64); }

int configured_decimal_digits() {
  return static_cast<int>(std::ceil(configured_precision() * std::log10(2.0))) + 1;
}

Real::Real() {
  mpfr_init2(value_, working_precision());
  mpfr_set_zero(value_, 1);
}

Real::Real(long v) {
  mpfr_init2(value_, working_precision());
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(const Rational& q, Rounding rnd) {
  mpfr_init2(value_, working_precision());
  mpfr_set_q(value_, q.get_mpq_t(), to_mpfr(rnd));
}

Real::Real(const Integer& z, Rounding rnd) {
  mpfr_init2(value_, working_precision());
  mpfr_set_z(value_, z.get_mpz_t(), to_mpfr(rnd));
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::add(const Real& a, const Real& b, Rounding rnd) {
  Real r;
  mpfr_add(r.value_, a.value_, b.value_, to_mpfr(rnd));
  return r;
}

Real Real::sub(const Real& a, const Real& b, Rounding rnd) {
  Real r;
  mpfr_sub(r.value_, a.value_, b.value_, to_mpfr(rnd));
  return r;
}

Real Real::mul(const Real& a, const Real& b, Rounding rnd) {
  Real r;
  mpfr_mul(r.value_, a.value_, b.value_, to_mpfr(rnd));
  return r;
}

Real Real::div(const Real& a, const Real& b, Rounding rnd) {
  Real r;
  mpfr_div(r.value_, a.value_, b.value_, to_mpfr(rnd));
  return r;
}

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

Integer Real::ceil() const {
  Integer z;
  mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDU);
  return z;
}

std::string Real::to_string(int digits) const {
  if (digits <= 0) digits = configured_decimal_digits();
  if (mpfr_integer_p(value_) && mpfr_get_exp(value_) < 200) {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), value_, MPFR_RNDN);
    return z.get_str();
  }
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return std::string(buf.data());
}

Real log(const Real& x, Rounding rnd) {
  Real r;
  mpfr_log(r.get(), x.get(), to_mpfr(rnd));
  return r;
}

Real log2(const Real& x, Rounding rnd) {
  Real r;
  mpfr_log2(r.get(), x.get(), to_mpfr(rnd));
  return r;
}

Real sqrt(const Real& x, Rounding rnd) {
  Real r;
  mpfr_sqrt(r.get(), x.get(), to_mpfr(rnd));
  return r;
}

Real exp(const Real& x, Rounding rnd) {
  Real r;
  mpfr_exp(r.get(), x.get(), to_mpfr(rnd));
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }
Real min(const Real& a, const Real& b) { return a < b ? a : b; }

Real log_base(const Real& x, long base, Rounding rnd) {
  if (base == 2) return log2(x, rnd);
  // Exact powers of the base give exact integer logarithms.
  if (x.is_integer() && x >= Real(1)) {
    Integer n = x.ceil();
    long k = 0;
    while (n % base == 0) {
      n /= base;
      ++k;
    }
    if (n == 1) return Real(k);
  }
  // For x >= 1 the numerator is nonnegative, so an upper bound divides an
  // upward-rounded log(x) by a downward-rounded log(base).
  const Real num = log(x, rnd);
  const Real den = log(Real(base), num.sign() >= 0 ? flip(rnd) : rnd);
  return Real::div(num, den, rnd);
}

}  // namespace ppb
