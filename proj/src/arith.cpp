#include "ppb/arith.hpp"

#include <optional>

#include <algorithm>
#include <array>

namespace ppb {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

namespace {

// Miller-Rabin with the first 13 prime bases is exact below this bound.
const Integer& mr_exact_limit() {
  static const Integer limit("3317044064679887385961981");
  return limit;
}

bool miller_rabin(const Integer& n, unsigned long base) {
  Integer d = n - 1;
  unsigned long s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  Integer a(base), x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
    if (x == nm1) return true;
  }
  return false;
}

constexpr std::array<unsigned long, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  for (unsigned long b : kBases) {
    if (n == b) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
  }
  if (n >= mr_exact_limit())
    throw SizeGuardError("primality of " + n.get_str() + " exceeds the deterministic range");
  return std::all_of(kBases.begin(), kBases.end(),
                     [&](unsigned long b) { return miller_rabin(n, b); });
}

Prime::Prime(const Integer& p) : p_(p) {
  if (!is_prime(p)) throw ArgumentError(p.get_str() + " is not prime");
}

const Prime& Place::prime() const {
  if (!prime_) throw ArgumentError("archimedean place has no prime");
  return *prime_;
}

std::string Place::name() const { return prime_ ? prime_->value().get_str() : "inf"; }

long Valuation::value() const {
  if (infinite_) throw ArgumentError("valuation of zero is +infinity");
  return value_;
}

Valuation padic_valuation(const Integer& x, const Prime& p) {
  if (x == 0) return Valuation::infinity();
  Integer rest;
  auto v = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.value().get_mpz_t());
  return Valuation(static_cast<long>(v));
}

Valuation padic_valuation(const Rational& x, const Prime& p) {
  if (x == 0) return Valuation::infinity();
  return Valuation(padic_valuation(x.get_num(), p).value() -
                   padic_valuation(x.get_den(), p).value());
}

long valuation_nonzero(const Rational& x, const Prime& p) {
  auto v = padic_valuation(x, p);
  if (v.is_infinite()) throw ArgumentError("valuation of zero requested");
  return v.value();
}

LogAbs operator*(const LogAbs& a, const LogAbs& b) {
  if (!(a.base == b.base)) throw ArgumentError("LogAbs product across different primes");
  return LogAbs(a.base, a.exponent + b.exponent);
}

bool operator==(const LogAbs& a, const LogAbs& b) { return compare(a, b) == 0; }

std::string LogAbs::to_string() const {
  return base.value().get_str() + "^(" + exponent.get_str() + ")";
}

namespace {

// Compares p^A against q^C for integers A, C.
int compare_integer_powers(const Integer& p, const Integer& A, const Integer& q,
                           const Integer& C) {
  const int sa = sgn(A), sc = sgn(C);
  if (sa <= 0 && sc >= 0) return (sa == 0 && sc == 0) ? 0 : -1;
  if (sa >= 0 && sc <= 0) return 1;
  if (sa < 0) return compare_integer_powers(q, -C, p, -A);
  // Both positive.
  const double bits = A.get_d() * mpz_sizeinbase(p.get_mpz_t(), 2) +
                      C.get_d() * mpz_sizeinbase(q.get_mpz_t(), 2);
  if (bits > double(1UL << 32))
    throw SizeGuardError("LogAbs comparison needs an integer power beyond 2^32 bits");
  return cmp(pow(p, A.get_ui()), pow(q, C.get_ui()));
}

}  // namespace

int compare(const LogAbs& a, const LogAbs& b) {
  if (a.base == b.base) return cmp(a.exponent, b.exponent);
  Integer L;
  mpz_lcm(L.get_mpz_t(), a.exponent.get_den_mpz_t(), b.exponent.get_den_mpz_t());
  const Integer A = a.exponent.get_num() * (L / a.exponent.get_den());
  const Integer C = b.exponent.get_num() * (L / b.exponent.get_den());
  return compare_integer_powers(a.base.value(), A, b.base.value(), C);
}

AbsValue abs_at(const Rational& x, const Place& v) {
  if (v.is_archimedean()) return Rational(abs(x));
  const auto val = padic_valuation(x, v.prime());
  if (val.is_infinite()) throw ArgumentError("|0|_p has no LogAbs representation");
  return LogAbs(v.prime(), Rational(-val.value()));
}

bool verify_product_formula(const Rational& x) {
  if (x == 0) throw ArgumentError("product formula needs a nonzero rational");
  Rational product = abs(x);
  for (const auto& p : prime_divisors(x.get_num() * x.get_den())) {
    const auto la = std::get<LogAbs>(abs_at(x, Place::finite(Prime(p))));
    // p^e with e an integer, since valuations are integral over Q.
    product *= pow(Rational(p), la.exponent.get_num().get_si());
  }
  return product == 1;
}

namespace {

// m = q^e with q prime and e >= 2, if so.
std::optional<PrimePower> prime_power_root(const Integer& m) {
  if (!mpz_perfect_power_p(m.get_mpz_t())) return std::nullopt;
  const unsigned long bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  Integer q;
  for (unsigned long e = bits; e >= 2; --e) {
    if (mpz_root(q.get_mpz_t(), m.get_mpz_t(), e) && is_prime(q)) return PrimePower{q, e};
  }
  return std::nullopt;
}

}  // namespace

std::vector<PrimePower> factor(const Integer& n) {
  if (n <= 0) throw ArgumentError("factor needs a positive integer");
  std::vector<PrimePower> out;
  Integer m = n;
  auto take = [&](unsigned long p) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
      ++e;
    }
    if (e) out.push_back({Integer(p), e});
  };
  take(2);
  for (unsigned long p = 3; p <= kTrialDivisionLimit; p += 2) {
    if (m == 1) break;
    if (Integer(p) * p > m) break;
    take(p);
  }
  if (m > 1) {
    // No factor <= min(limit, sqrt(m)) remains.
    const Integer lim(kTrialDivisionLimit);
    if (m <= lim * lim || is_prime(m)) {
      out.push_back({m, 1});
    } else if (const auto root = prime_power_root(m)) {
      out.push_back(*root);
    } else {
      throw SizeGuardError("cofactor " + m.get_str() +
                           " has no prime factor below 2^20 and is composite");
    }
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  if (n == 0) throw ArgumentError("prime divisors of zero");
  std::vector<Integer> out;
  for (auto& pp : factor(abs(n))) out.push_back(pp.prime);
  return out;
}

Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational pow(const Rational& base, long e) {
  if (e >= 0) {
    return make_rational(pow(base.get_num(), static_cast<unsigned long>(e)),
                         pow(base.get_den(), static_cast<unsigned long>(e)));
  }
  if (base == 0) throw ArgumentError("zero to a negative power");
  const auto k = static_cast<unsigned long>(-e);
  return make_rational(pow(base.get_den(), k), pow(base.get_num(), k));
}

}  // namespace ppb
