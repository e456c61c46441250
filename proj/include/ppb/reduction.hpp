#pragma once

// Places of bad reduction and normalized filled-Julia-set radii over Q.
//
// Method. Let b be a fixed point of phi and psi(z) = phi(z + b) - b, whose
// roots are the displacements x - b for x in phi^{-1}(b). After scaling to the
// monic conjugate (multiply displacements by alpha, alpha^{d-1} = a_d) the
// smallest disk containing the filled Julia set has radius
//     r_v = max(1, |alpha|_v * max |x - b|_v)
// because the Newton polygon of the monic translate puts a root at the
// largest radius max |a_i|^{1/(d-i)}, and every |z| beyond it escapes with
// |psi(z)| = |z|^d. When r_v > 1 that disk is unique and any point of it is a
// center, so the value is the same for every fixed point b; when r_v = 1 all
// displacements are at most 1 after scaling. Taking the maximum over all
// fixed points at once therefore gives r_v exactly.
//
// All pairs (b, x) are captured without leaving Q by the displacement
// resultant P(w) = Res_z(phi(z) - z, phi(z + w) - z): its roots are exactly
// the values x - b. The largest |w|_p over nonzero roots is the largest slope
// of the Newton polygon of P / w^k, so
//     rho = log_p r_v = max(0, maxslope - v_p(a_d)/(d-1)).

#include <optional>
#include <vector>

#include "ppb/arith.hpp"
#include "ppb/poly.hpp"

namespace ppb::reduction {

/// One edge of a lower convex hull of (i, v_p(c_i)).
struct NewtonSegment {
  long start;      // abscissa of the left vertex
  long length;     // horizontal length = number of roots with this valuation
  Rational slope;  // the roots on this edge have valuation -slope
};

struct NewtonPolygon {
  std::vector<NewtonSegment> segments;  // left to right, slopes increasing

  /// (valuation, multiplicity) of the nonzero roots, ascending valuation.
  std::vector<std::pair<Rational, long>> root_valuations() const;
  /// max log_p |w| over roots, i.e. the largest slope. Throws if no segment.
  Rational max_root_log_abs() const;
};

/// Newton polygon of a polynomial with nonzero constant term at p. Zero roots
/// must be stripped first (ArgumentError otherwise).
NewtonPolygon newton_polygon(const UPoly& f, const Prime& p);

/// Per-place record. rho is the log_p of the normalized radius r_v and
/// r_prime_rho the log_p of the raw radius r'_v; both are absent for the
/// archimedean place, which is bad by convention.
struct PlaceReport {
  Place place;
  std::optional<Rational> rho;
  std::optional<Rational> r_prime_rho;
  bool bad;
};

struct BadPrimeCensus {
  std::vector<PlaceReport> reports;  // archimedean first, then primes ascending
  long s;                            // bad places including the archimedean one
  long s_inf;                        // always 1 over Q

  std::vector<Prime> bad_primes() const;
};

/// |a_i|_p <= 1 for all i and |a_d|_p = 1.
bool plain_good_reduction(const Polynomial& phi, const Prime& p);

/// Primes at which plain_good_reduction fails, ascending. Every potentially
/// bad prime is among them.
std::vector<Prime> candidate_primes(const Polynomial& phi);

/// Sylvester matrix of two polynomials in z whose coefficients are
/// polynomials in w; rows ordered f-shifts then g-shifts.
using PolyMatrix = std::vector<std::vector<UPoly>>;
PolyMatrix sylvester_matrix(const std::vector<UPoly>& f, const std::vector<UPoly>& g);

/// Determinant over Q[w] by fraction-free (Bareiss) elimination with row pivoting.
UPoly bareiss_determinant(PolyMatrix m);

/// P(w) = Res_z(phi(z) - z, phi(z + w) - z). Always P(0) = 0, and P has a
/// nonzero root; InternalError if either fails.
UPoly displacement_resultant(const Polynomial& phi);

/// Radius report at p, computed from a precomputed displacement resultant.
PlaceReport radius_from_resultant(const Polynomial& phi, const UPoly& resultant, const Prime& p);

/// Radius report at p (valid for any prime; good primes give rho = 0).
PlaceReport radius_at(const Polynomial& phi, const Prime& p);

/// Archimedean place plus radius_at over candidate_primes.
BadPrimeCensus bad_census(const Polynomial& phi);

/// Minimal-radius lower bound at a bad prime for maps with a rational point in
/// the filled Julia set: rho >= 1 (d = 2) or rho >= 1/((d-1)(d-2)) (d >= 3).
/// Vacuously true for good places. The caller is responsible for checking
/// that phi has a rational preperiodic point.
bool minrad_holds(const Polynomial& phi, const PlaceReport& report);

/// Real escape radius B: every rational x with |x| > B satisfies
/// |phi(x)| > |x| and so has a strictly increasing, hence infinite, orbit.
///
/// General case: B = max(1, (1 + sum_{i<d} |a_i|) / |a_d|). For |x| > B >= 1,
///   |phi(x)| >= |x|^{d-1} (|a_d||x| - sum_{i<d}|a_i|) > |x|^{d-1} >= |x|.
/// For z^2 + c with c <= 1/4 the bound tightens to (1 + sqrt(1 - 4c))/2: for
/// real |x| above it, x^2 - |x| + c > 0 when c > 0, and x^2 - |c| > |x| when
/// c <= 0. The square root is rounded up to a rational within 1e-7.
Rational arch_escape_radius(const Polynomial& phi);

/// Radius of a disk about 0 that contains the complex filled Julia set (an
/// upper bound for r'_inf). Equals (1 + sqrt(1 + 4|c|))/2 for z^2 + c, which
/// is exact for c <= 0, and the general escape bound otherwise.
Rational arch_disk_radius(const Polynomial& phi);

/// Upper rational approximation of sqrt(q) within 10^-7 (exact for squares).
Rational sqrt_upper(const Rational& q);

}  // namespace ppb::reduction
