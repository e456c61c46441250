#include "ppb/exponents.hpp"

#include <utility>
#include <vector>

namespace ppb::exponents {

namespace {

void require_m(long m, long d) {
  if (d < 2) throw ArgumentError("degree d must be >= 2");
  if (m < 1 || m > d) throw ArgumentError("m must satisfy 1 <= m <= d");
}

using Factor = std::pair<Integer, Integer>;  // base^exponent, base >= 1

Integer product(const std::vector<Factor>& fs) {
  Integer r = 1;
  for (const auto& [b, e] : fs) {
    if (sgn(e) == 0) continue;
    if (e > Integer(1) << 30) throw SizeGuardError("power too large in bound check");
    r *= pow(b, e.get_ui());
  }
  return r;
}

// Sign of prod(lhs) - prod(rhs) where negative exponents are moved across.
int compare_products(std::vector<Factor> lhs, std::vector<Factor> rhs) {
  std::vector<Factor> L, R;
  for (auto& [b, e] : lhs) (sgn(e) >= 0 ? L : R).push_back({b, abs(e)});
  for (auto& [b, e] : rhs) (sgn(e) >= 0 ? R : L).push_back({b, abs(e)});
  return cmp(product(L), product(R));
}

BoundCheck make_check(int c) { return BoundCheck{c <= 0, c == 0}; }

}  // namespace

ExpParams::ExpParams(long N_, long m_, long d_) : N(N_), m(m_), d(d_) {
  if (N < 0) throw ArgumentError("N must be >= 0");
  require_m(m, d);
  c0 = N % m;
  k = N / m;
}

long digit_sum(long j, long d) {
  if (j < 0) throw ArgumentError("digit_sum is undefined for negative integers");
  if (d < 2) throw ArgumentError("base must be >= 2");
  long s = 0;
  for (; j > 0; j /= d) s += j % d;
  return s;
}

Integer E_big(long N, long d) {
  if (d < 2) throw ArgumentError("base must be >= 2");
  if (N <= 1) return 0;
  Integer s = 0;
  for (long j = 0; j < N; ++j) s += digit_sum(j, d);
  return 2 * s;
}

long e_small(long N, long m, long d) {
  const ExpParams p(N, m, d);
  return p.c0 + digit_sum(p.k, d) - (d - m) * p.k;
}

long f_small(long N, long m, long d) {
  const ExpParams p(N, m, d);
  return p.c0 + digit_sum(p.k, d);
}

Integer E_mid(long N, long m, long d) {
  require_m(m, d);
  if (N <= 1) return 0;
  Integer s = 0;
  for (long j = 0; j < N; ++j) s += e_small(j, m, d);
  return 2 * s;
}

Integer F_mid(long N, long m, long d) {
  require_m(m, d);
  if (N <= 1) return 0;
  Integer s = 0;
  for (long j = 0; j < N; ++j) s += f_small(j, m, d);
  return 2 * s;
}

Integer F_closed(long N, long m, long d) {
  if (N < 1) throw ArgumentError("closed forms need N >= 1");
  const ExpParams p(N, m, d);
  const long c = p.c0;
  return (m - c) * E_big(p.k, d) + c * E_big(p.k + 1, d) + Integer(m - 1) * N -
         Integer(c) * (m - c);
}

Integer E_closed(long N, long m, long d) {
  const ExpParams p(N, m, d);
  const long c = p.c0;
  const Integer bracket = Integer(d - m) * (Integer(N) * N - Integer(m) * N + Integer(c) * (m - c));
  if (!mpz_divisible_ui_p(bracket.get_mpz_t(), static_cast<unsigned long>(m)))
    throw InternalError("(d-m)/m [N^2 - mN + c(m-c)] is not an integer");
  return F_closed(N, m, d) - bracket / m;
}

bool is_power_of(long n, long base) {
  if (n < 1) return false;
  while (n % base == 0) n /= base;
  return n == 1;
}

BoundChecks check_bounds(long N, long m, long d) {
  if (N < 1) throw ArgumentError("check_bounds needs N >= 1");
  if (d < 2 || m < 1 || m > d - 1) throw ArgumentError("check_bounds needs 1 <= m <= d-1");
  const Integer Nz(N), dz(d), mz(m);
  const Integer E = E_big(N, d);
  const Integer Em = E_mid(N, m, d);
  const Integer Fm = F_mid(N, m, d);
  const Integer rhs_exp = Integer(d - 1) * N;

  BoundChecks out{};
  out.a = make_check(compare_products({{dz, E}}, {{Nz, rhs_exp}}));

  const Integer b_mexp = mz * (d - 1) * N;
  out.b = make_check(compare_products({{dz, mz * Em + Integer(d - m) * Nz * Nz}, {mz, b_mexp}},
                                      {{dz * Nz, b_mexp}}));

  out.c = make_check(compare_products({{dz, Fm}}, {{Nz, rhs_exp}}));

  out.d_applicable = N >= m;
  if (out.d_applicable) {
    out.d = make_check(compare_products({{dz, Fm - Integer(m - 1) * N}, {mz, rhs_exp}},
                                        {{Nz, rhs_exp}}));
  } else {
    out.d = BoundCheck{true, false};
  }
  return out;
}

bool split_hypothesis_holds(long m, long d) { return d >= 2 && m >= 1 && d - m >= 1; }

ThresholdParams::ThresholdParams(Unchecked, Real A, Real B, Real t, long d)
    : A_(std::move(A)), B_(std::move(B)), t_(std::move(t)), d_(d) {}

ThresholdParams::ThresholdParams(Real A, Real B, Real t, long d)
    : ThresholdParams(Unchecked{}, std::move(A), std::move(B), std::move(t), d) {
  if (d_ < 2) throw ArgumentError("threshold needs d >= 2");
  if (A_.sign() <= 0 || B_.sign() <= 0) throw ArgumentError("threshold needs A, B > 0");
  if (t_ < Real(1)) throw ArgumentError("threshold needs t >= 1");
  // (d-1)A >= d^{B-1}, with relative slack for exact-equality inputs.
  const Real lhs = Real(d_ - 1) * A_;
  const Real rhs = exp((B_ - Real(1)) * log(Real(d_)));
  Real slack(Rational(1));
  mpfr_div_2si(slack.get(), slack.get(), configured_precision(), MPFR_RNDN);
  if (lhs < rhs * (Real(1) - slack))
    throw ArgumentError("threshold hypothesis (d-1)A >= d^(B-1) fails");
}

ThresholdParams ThresholdParams::from_split(long m, long d, const Real& t) {
  if (!split_hypothesis_holds(m, d)) throw ArgumentError("split needs 1 <= m <= d-1");
  if (t < Real(1)) throw ArgumentError("threshold needs t >= 1");
  // A rounded down keeps t/A an upper bound; B = 1 - log_d m.
  Real A(make_rational(d - m, Integer(m) * (d - 1)), Rounding::Down);
  Real B = Real(1) - log_base(Real(m), d);
  return ThresholdParams(Unchecked{}, std::move(A), std::move(B), t, d);
}

Real threshold_M(const ThresholdParams& p) {
  const long d = p.d();
  // Every term is nonnegative for t >= 1, so rounding each step upward
  // yields an upper bound for M.
  const Real lt = log_base(p.t(), d, Rounding::Up);
  const Real llt = log_base(max(Real(1), lt), d, Rounding::Up);
  const Real inner = Real::add(Real::add(lt, llt, Rounding::Up), Real(3), Rounding::Up);
  const Real ratio = Real::div(p.t(), p.A(), Rounding::Up);
  return Real::mul(ratio, inner, Rounding::Up);
}

Real eta(const Real& x, const ThresholdParams& p) {
  if (x.sign() <= 0) throw ArgumentError("eta is defined for x > 0");
  return p.t() * log_base(x, p.d()) - p.A() * x + p.B();
}

}  // namespace ppb::exponents
