#pragma once

// Digit-sum exponent calculus: e(j,d), E(N,d), e/f(N,m,d), E/F(N,m,d), their
// closed forms, the four sharp upper bounds, and the threshold M(A,B,t).
//
// All integer quantities are exact; the bounds are checked as comparisons of
// integer powers with the logarithms cleared, so equality is detected exactly.

#include <cstdint>

#include "ppb/arith.hpp"
#include "ppb/real.hpp"

namespace ppb::exponents {

/// N = c0 + m*k with 0 <= c0 < m. Requires N >= 0 and 1 <= m <= d.
struct ExpParams {
  long N;
  long m;
  long d;
  long c0;
  long k;

  ExpParams(long N, long m, long d);
};

/// Sum of the base-d digits of j. Throws ArgumentError for j < 0 or d < 2.
long digit_sum(long j, long d);

/// E(N,d) = 2 * sum_{j<N} digit_sum(j,d); zero for N <= 1.
Integer E_big(long N, long d);

/// e(N,m,d) = c0 + e(k,d) - (d-m)k   (may be negative).
long e_small(long N, long m, long d);
/// f(N,m,d) = c0 + e(k,d).
long f_small(long N, long m, long d);

/// Direct sums 2*sum_{j<N} e(j,m,d) and 2*sum_{j<N} f(j,m,d); zero for N <= 1.
Integer E_mid(long N, long m, long d);
Integer F_mid(long N, long m, long d);

/// F(N,m,d) = (m-c)E(k,d) + cE(k+1,d) + (m-1)N - c(m-c).
Integer F_closed(long N, long m, long d);
/// E(N,m,d) = F(N,m,d) - (d-m)/m [N^2 - mN + c(m-c)]. The bracketed term is
/// asserted divisible by m (InternalError otherwise).
Integer E_closed(long N, long m, long d);

/// One of the four sharp bounds, evaluated exactly.
struct BoundCheck {
  bool holds;
  bool equality;
};

/// The four bounds for (N, m, d), 1 <= m <= d-1, with logarithms cleared:
///   (a) d^{E(N,d)} <= N^{(d-1)N}
///   (b) d^{m E(N,m,d) + (d-m)N^2} * m^{m(d-1)N} <= (dN)^{m(d-1)N}
///       [multiply the stated bound by m, exponentiate base d, clear (dN/m)]
///   (c) d^{F(N,m,d)} <= N^{(d-1)N}
///   (d) d^{F(N,m,d) - (m-1)N} * m^{(d-1)N} <= N^{(d-1)N}   (only for N >= m;
///       `applicable` is false otherwise)
struct BoundChecks {
  BoundCheck a;
  BoundCheck b;
  BoundCheck c;
  BoundCheck d;
  bool d_applicable;
};

BoundChecks check_bounds(long N, long m, long d);

/// True iff n = base^i for some i >= 0.
bool is_power_of(long n, long base);

/// Parameters of the threshold function; (d-1)A >= d^{B-1}, t >= 1, A, B > 0.
class ThresholdParams {
 public:
  /// General constructor. The hypothesis is checked in working precision with
  /// a relative slack of 2^-(configured precision) so exact-equality cases
  /// are not rejected by rounding. Throws ArgumentError on violation.
  ThresholdParams(Real A, Real B, Real t, long d);

  /// The pairing used for the piece mapping m-to-1: A = (d-m)/(m(d-1)),
  /// B = 1 - log_d m. The hypothesis is checked exactly: it reduces to
  /// d - m >= 1.
  static ThresholdParams from_split(long m, long d, const Real& t);

  const Real& A() const { return A_; }
  const Real& B() const { return B_; }
  const Real& t() const { return t_; }
  long d() const { return d_; }

 private:
  struct Unchecked {};
  ThresholdParams(Unchecked, Real A, Real B, Real t, long d);
  Real A_, B_, t_;
  long d_;
};

/// Exact form of the from_split hypothesis: (d-1)A >= d^{B-1} with the values
/// above is equivalent to (d-m)/m >= 1/m, i.e. d - m >= 1.
bool split_hypothesis_holds(long m, long d);

/// M(A,B,t) = t/A (log_d t + log_d max{1, log_d t} + 3), rounded upward.
Real threshold_M(const ThresholdParams& p);

/// eta(x) = t log_d x - A x + B, evaluated in working precision.
Real eta(const Real& x, const ThresholdParams& p);

}  // namespace ppb::exponents
