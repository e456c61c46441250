#include "ppb/reduction.hpp"

#include <algorithm>
#include <set>

namespace ppb::reduction {

std::vector<std::pair<Rational, long>> NewtonPolygon::root_valuations() const {
  std::vector<std::pair<Rational, long>> out;
  for (auto it = segments.rbegin(); it != segments.rend(); ++it)
    out.emplace_back(-it->slope, it->length);
  return out;
}

Rational NewtonPolygon::max_root_log_abs() const {
  if (segments.empty()) throw ArgumentError("Newton polygon has no segments");
  return segments.back().slope;
}

NewtonPolygon newton_polygon(const UPoly& f, const Prime& p) {
  if (f.is_zero() || f.coeff(0) == 0)
    throw ArgumentError("Newton polygon needs a nonzero constant term");
  struct Pt {
    long x;
    Rational y;
  };
  std::vector<Pt> pts;
  for (long i = 0; i <= f.degree(); ++i) {
    const Rational c = f.coeff(i);
    if (c != 0) pts.push_back({i, Rational(valuation_nonzero(c, p))});
  }
  // Monotone-chain lower hull; points arrive sorted by x.
  std::vector<Pt> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      // Drop b if it lies on or above segment a-q.
      if ((b.y - a.y) * (q.x - a.x) >= (q.y - a.y) * (b.x - a.x))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(q);
  }
  NewtonPolygon np;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const long len = hull[i + 1].x - hull[i].x;
    np.segments.push_back({hull[i].x, len, (hull[i + 1].y - hull[i].y) / Rational(len)});
  }
  return np;
}

std::vector<Prime> BadPrimeCensus::bad_primes() const {
  std::vector<Prime> out;
  for (const auto& r : reports)
    if (!r.place.is_archimedean() && r.bad) out.push_back(r.place.prime());
  return out;
}

bool plain_good_reduction(const Polynomial& phi, const Prime& p) {
  for (const auto& c : phi.coeffs()) {
    if (c == 0) continue;
    if (valuation_nonzero(c, p) < 0) return false;
  }
  return valuation_nonzero(phi.leading(), p) == 0;
}

std::vector<Prime> candidate_primes(const Polynomial& phi) {
  std::set<Integer> primes;
  for (const auto& c : phi.coeffs())
    if (c != 0)
      for (auto& q : prime_divisors(c.get_den())) primes.insert(q);
  for (auto& q : prime_divisors(phi.leading().get_num())) primes.insert(q);
  std::vector<Prime> out;
  for (const auto& q : primes) out.emplace_back(q);
  return out;
}

PolyMatrix sylvester_matrix(const std::vector<UPoly>& f, const std::vector<UPoly>& g) {
  // f, g given low-to-high in z.
  const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
  PolyMatrix s(size, std::vector<UPoly>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = f[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = g[n - j];
  return s;
}

UPoly bareiss_determinant(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return UPoly::constant(1);
  bool negate = false;
  UPoly prev = UPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return UPoly();
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).exact_div(prev);
      a[i][k] = UPoly();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

namespace {

Integer binomial(long n, long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

UPoly displacement_resultant(const Polynomial& phi) {
  const long d = phi.degree();
  // f(z) = phi(z) - z with constant coefficients.
  std::vector<UPoly> f;
  for (long i = 0; i <= d; ++i) f.push_back(UPoly::constant(phi.coeff(i) - (i == 1 ? 1 : 0)));
  // g(z) = phi(z + w) - z; coefficient of z^j is sum_{k>=j} a_k C(k,j) w^{k-j}.
  std::vector<UPoly> g;
  for (long j = 0; j <= d; ++j) {
    std::vector<Rational> cw(static_cast<std::size_t>(d - j + 1));
    for (long k = j; k <= d; ++k) cw[static_cast<std::size_t>(k - j)] = phi.coeff(k) * binomial(k, j);
    if (j == 1) cw[0] -= 1;
    g.emplace_back(std::move(cw));
  }
  UPoly res = bareiss_determinant(sylvester_matrix(f, g));
  if (res.is_zero()) throw InternalError("displacement resultant vanished identically");
  if (res.coeff(0) != 0) throw InternalError("displacement resultant has P(0) != 0");
  if (res.strip_zero_roots().degree() < 1)
    throw InternalError("displacement resultant has no nonzero root");
  return res;
}

PlaceReport radius_from_resultant(const Polynomial& phi, const UPoly& resultant, const Prime& p) {
  const long d = phi.degree();
  const UPoly stripped = resultant.strip_zero_roots();
  if (stripped.degree() < 1) throw InternalError("displacement resultant has no nonzero root");
  const Rational mu = newton_polygon(stripped, p).max_root_log_abs();
  const Rational lead_shift(valuation_nonzero(phi.leading(), p), d - 1);
  Rational rho = mu - lead_shift;
  rho.canonicalize();
  if (rho < 0) rho = 0;
  Rational rprime = rho + lead_shift;
  rprime.canonicalize();
  return PlaceReport{Place::finite(p), rho, rprime, rho > 0};
}

PlaceReport radius_at(const Polynomial& phi, const Prime& p) {
  return radius_from_resultant(phi, displacement_resultant(phi), p);
}

BadPrimeCensus bad_census(const Polynomial& phi) {
  BadPrimeCensus census{{PlaceReport{Place::archimedean(), std::nullopt, std::nullopt, true}}, 1, 1};
  const auto primes = candidate_primes(phi);
  if (primes.empty()) return census;
  const UPoly res = displacement_resultant(phi);
  for (const auto& p : primes) {
    census.reports.push_back(radius_from_resultant(phi, res, p));
    if (census.reports.back().bad) ++census.s;
  }
  return census;
}

bool minrad_holds(const Polynomial& phi, const PlaceReport& report) {
  if (report.place.is_archimedean() || !report.bad) return true;
  const long d = phi.degree();
  const Rational need = d == 2 ? Rational(1) : make_rational(1, Integer(d - 1) * (d - 2));
  return *report.rho >= need;
}

Rational sqrt_upper(const Rational& q) {
  if (q < 0) throw ArgumentError("sqrt of a negative rational");
  if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
    Integer a, b;
    mpz_sqrt(a.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), q.get_den_mpz_t());
    return make_rational(a, b);
  }
  const Integer scale("10000000");
  const Integer scaled = (q.get_num() * scale * scale) / q.get_den();
  Integer root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return make_rational(root + 1, scale);
}

namespace {

Rational general_escape(const Polynomial& phi) {
  Rational sum(1);
  for (long i = 0; i < phi.degree(); ++i) sum += abs(phi.coeff(i));
  Rational b = sum / abs(phi.leading());
  return b < 1 ? Rational(1) : b;
}

}  // namespace

Rational arch_escape_radius(const Polynomial& phi) {
  Rational c;
  if (phi.is_quadratic_family(&c) && c <= Rational(1, 4)) {
    Rational tight = (1 + sqrt_upper(1 - 4 * c)) / 2;
    tight.canonicalize();
    return std::min(tight, general_escape(phi));
  }
  return general_escape(phi);
}

Rational arch_disk_radius(const Polynomial& phi) {
  Rational c;
  if (phi.is_quadratic_family(&c)) {
    Rational r = (1 + sqrt_upper(1 + 4 * abs(c))) / 2;
    r.canonicalize();
    return r;
  }
  return general_escape(phi);
}

}  // namespace ppb::reduction
