#include "ppb/capacity.hpp"

#include <set>

#include "ppb/exponents.hpp"

namespace ppb::capacity {

namespace {

void require_distinct(std::span<const Rational> points) {
  if (points.size() < 2) throw ArgumentError("pairwise product needs at least two points");
  std::set<Rational> uniq(points.begin(), points.end());
  if (uniq.size() != points.size()) throw ArgumentError("pairwise product needs distinct points");
}

// prod_{i<j} (x_i - x_j), whose square is the ordered-pair product.
Rational half_product(std::span<const Rational> points) {
  Rational prod(1);
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) prod *= points[i] - points[j];
  return prod;
}

Real log_of(const LogAbs& a) { return log(Real(a.base.value())) * Real(a.exponent); }

}  // namespace

AbsValue pairwise_product(std::span<const Rational> points, const Place& v) {
  require_distinct(points);
  const Rational h = half_product(points);
  if (v.is_archimedean()) return Rational(h * h);
  return LogAbs(v.prime(), Rational(-2 * valuation_nonzero(h, v.prime())));
}

ProductBoundCheck check_capbd(const Polynomial& phi, std::span<const Rational> points,
                              const reduction::PlaceReport& report) {
  require_distinct(points);
  const long d = phi.degree();
  const long N = static_cast<long>(points.size());
  const Integer E = exponents::E_big(N, d);
  const Place& v = report.place;
  const Integer pairs = Integer(N) * (N - 1);

  if (!v.is_archimedean()) {
    const Prime& p = v.prime();
    const auto lhs = std::get<LogAbs>(pairwise_product(points, v));
    // log_p of each factor on the right.
    const Rational lead = Rational(valuation_nonzero(phi.leading(), p)) * pairs / (d - 1);
    const long vN = padic_valuation(Integer(N), p).value();
    const Rational nterm = std::max(Rational(0), Rational(-N * vN));
    const Rational radius = *report.rho * E;
    Rational rhs_exp = lead + nterm + radius;
    rhs_exp.canonicalize();
    const LogAbs rhs(p, rhs_exp);
    ProductBoundCheck out{v, static_cast<std::size_t>(N), lhs, rhs, log_of(lhs), log_of(rhs), Real(), false};
    out.margin = out.rhs_log - out.lhs_log;
    out.holds = compare(lhs, rhs) <= 0;
    return out;
  }

  // Archimedean: |a_d|^{(E - N(N-1))/(d-1)} N^N r'^E with r = |a_d|^{1/(d-1)} r'.
  // r' is rational, so raising both sides to the power d-1 compares exactly;
  // the logarithms only report the margin.
  const Rational lhs = std::get<Rational>(pairwise_product(points, v));
  const Rational rprime = reduction::arch_disk_radius(phi);
  const Rational lead = abs(phi.leading());
  const long e_lead = Integer(E - pairs).get_si();
  const Rational lhs_pow = pow(lhs, d - 1);
  const Rational rhs_pow = pow(lead, e_lead) * pow(Rational(N), N * (d - 1)) * pow(rprime, E.get_si() * (d - 1));

  const Real rhs_log = log(Real(lead)) * Real(make_rational(E - pairs, Integer(d - 1))) +
                       Real(N) * log(Real(N)) + Real(E) * log(Real(rprime));
  ProductBoundCheck out{v, static_cast<std::size_t>(N), std::nullopt, std::nullopt,
                        log(Real(lhs)), rhs_log, Real(), lhs_pow <= rhs_pow};
  out.margin = lhs_pow == rhs_pow ? Real(0) : out.rhs_log - out.lhs_log;
  return out;
}

ProductBoundCheck check_capbd(const Polynomial& phi, std::span<const Rational> points, const Place& v) {
  if (v.is_archimedean())
    return check_capbd(phi, points, reduction::PlaceReport{v, std::nullopt, std::nullopt, true});
  return check_capbd(phi, points, reduction::radius_at(phi, v.prime()));
}

bool global_product_is_one(std::span<const Rational> points) {
  const Rational arch = std::get<Rational>(pairwise_product(points, Place::archimedean()));
  Rational total = arch;
  for (const auto& q : prime_divisors(arch.get_num() * arch.get_den())) {
    const auto la = std::get<LogAbs>(pairwise_product(points, Place::finite(Prime(q))));
    total *= pow(Rational(q), la.exponent.get_num().get_si());
  }
  return total == 1;
}

}  // namespace ppb::capacity
