#include <doctest.h>

#include <set>

#include "ppb/capacity.hpp"
#include "ppb/parse.hpp"
#include "ppb/preperiodic.hpp"

using namespace ppb;
using namespace ppb::capacity;
using ppb::cli::parse_poly;

namespace {

std::vector<Rational> eight() {
  return preperiodic::enumerate_preperiodic(parse_poly("z^2 - 29/16")).values();
}

// Quadratic instances with at least two finite preperiodic points.
std::vector<Polynomial> rich_instances() {
  std::vector<Polynomial> out;
  for (long den : {1L, 2L, 3L, 4L, 5L, 6L, 7L, 8L, 10L, 12L, 15L, 20L}) {
    const preperiodic::ScanRange range{den, Rational(-12), Rational(1, 4)};
    for (const auto& row : preperiodic::scan_quadratic(range))
      if (row.finite_count >= 2)
        out.emplace_back(std::vector<Rational>{row.c, Rational(0), Rational(1)});
  }
  for (const char* s : {"z^3 - (1/25)z", "z^3 - 3z", "z^3", "z^2 - (1/3)z", "2z^2 - 1", "z^3 - (7/4)z"})
    if (preperiodic::enumerate_preperiodic(parse_poly(s)).finite_count() >= 2) out.push_back(parse_poly(s));
  return out;
}

std::set<Integer> relevant_primes(const Polynomial& phi, std::span<const Rational> pts) {
  std::set<Integer> ps;
  for (const auto& p : reduction::candidate_primes(phi)) ps.insert(p.value());
  Rational h(1);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) h *= pts[i] - pts[j];
  for (const auto& q : prime_divisors(h.get_num() * h.get_den())) ps.insert(q);
  return ps;
}

}  // namespace

TEST_CASE("pairwise product of the worked example (oracle values)") {
  const auto pts = eight();
  REQUIRE(pts.size() == 8);
  CHECK(std::get<Rational>(pairwise_product(pts, Place::archimedean())) ==
        Rational(Integer("3661960640625"), Integer("16777216")));
  CHECK(std::get<LogAbs>(pairwise_product(pts, Place::finite(Prime(2)))) == LogAbs(Prime(2), Rational(24)));
  CHECK(std::get<LogAbs>(pairwise_product(pts, Place::finite(Prime(3)))) == LogAbs(Prime(3), Rational(-14)));
  CHECK(global_product_is_one(pts));
  CHECK_THROWS_AS(pairwise_product(std::vector<Rational>{Rational(1)}, Place::archimedean()), ArgumentError);
  CHECK_THROWS_AS(pairwise_product(std::vector<Rational>{Rational(1), Rational(1)}, Place::archimedean()),
                  ArgumentError);
}

TEST_CASE("pairwise product bound is sharp at 2 for the worked example") {
  const auto phi = parse_poly("z^2 - 29/16");
  const auto pts = eight();
  const auto at2 = check_capbd(phi, pts, Place::finite(Prime(2)));
  CHECK(at2.holds);
  REQUIRE(at2.lhs_exact.has_value());
  CHECK(*at2.lhs_exact == LogAbs(Prime(2), Rational(24)));
  CHECK(*at2.rhs_exact == LogAbs(Prime(2), Rational(24)));  // rho = 1, E(8,2) = 24
  CHECK(compare(*at2.lhs_exact, *at2.rhs_exact) == 0);
  CHECK(at2.margin.to_double() == doctest::Approx(0.0));

  const auto arch = check_capbd(phi, pts, Place::archimedean());
  CHECK(arch.holds);
  CHECK(arch.margin.sign() > 0);
  CHECK_FALSE(arch.lhs_exact.has_value());

  // at a good prime the bound is 1 (max{1, |N|_p^N} = 1 for finite p)
  const auto at3 = check_capbd(phi, pts, Place::finite(Prime(3)));
  CHECK(at3.holds);
  CHECK(*at3.rhs_exact == LogAbs(Prime(3), Rational(0)));
}

TEST_CASE("archimedean equality is detected exactly") {
  // c = -286/225: the disk radius (1 + sqrt(1 - 4c))/2 = 26/15 is itself a
  // preperiodic point, and so is -26/15; for N = 2 the bound reads
  // (x1 - x2)^2 <= 4 r^2 with equality.
  const auto phi = parse_poly("z^2 - 286/225");
  const std::vector<Rational> pair{Rational(-26, 15), Rational(26, 15)};
  const auto c = check_capbd(phi, pair, Place::archimedean());
  CHECK(c.holds);
  CHECK(c.margin == Real(0));
  const std::vector<Rational> outside{Rational(-2), Rational(2)};
  CHECK_FALSE(check_capbd(phi, outside, Place::archimedean()).holds);
}

TEST_CASE("property: product formula on difference products and capbd on all subsets of size <= 6") {
  const auto instances = rich_instances();
  REQUIRE(instances.size() >= 100);
  std::size_t checks = 0;
  for (const auto& phi : instances) {
    const auto pts = preperiodic::enumerate_preperiodic(phi).values();
    REQUIRE(pts.size() >= 2);
    REQUIRE(global_product_is_one(pts));
    const auto census = reduction::bad_census(phi);
    const std::size_t n = pts.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      const int k = __builtin_popcount(mask);
      if (k < 2 || k > 6) continue;
      std::vector<Rational> sub;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) sub.push_back(pts[i]);
      REQUIRE(global_product_is_one(sub));
      CAPTURE(phi.to_string());
      CAPTURE(k);
      REQUIRE(check_capbd(phi, sub, Place::archimedean()).holds);
      for (const auto& q : relevant_primes(phi, sub)) {
        const Prime p(q);
        reduction::PlaceReport report{Place::finite(p), Rational(0), Rational(0), false};
        for (const auto& r : census.reports)
          if (!r.place.is_archimedean() && r.place.prime() == p) report = r;
        const auto c = check_capbd(phi, sub, report);
        CAPTURE(q.get_str());
        REQUIRE(c.holds);
        REQUIRE(compare(*c.lhs_exact, *c.rhs_exact) <= 0);
        ++checks;
      }
    }
  }
  MESSAGE("finite-place subset checks: " << checks << " over " << instances.size() << " instances");
}
