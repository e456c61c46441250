#include <doctest.h>

#include <map>
#include <set>

#include "ppb/parse.hpp"
#include "ppb/preperiodic.hpp"
#include "support.hpp"

using namespace ppb;
using namespace ppb::preperiodic;
using ppb::cli::parse_poly;
using ppb::test::uniform;

namespace {

std::vector<Rational> values_of(const char* poly) { return enumerate_preperiodic(parse_poly(poly)).values(); }

std::vector<Rational> rationals(std::initializer_list<const char*> xs) {
  std::vector<Rational> out;
  for (const char* x : xs) out.push_back(cli::parse_rational(x));
  return out;
}

}  // namespace

TEST_CASE("candidate box") {
  const auto box = build_box(parse_poly("z^2 - 29/16"));
  CHECK(box.prime_caps == std::map<Integer, long>{{Integer(2), 2}});
  CHECK(box.denominators() == std::vector<Integer>{Integer(1), Integer(2), Integer(4)});
  CHECK(box.arch_bound > Rational(19361, 10000));
  CHECK(box.arch_bound < Rational(9681, 5000));
  CHECK(box.candidate_count() == 3 + 7 + 15);
  CHECK(box.contains(Rational(7, 4)));
  CHECK(box.violation(Rational(2)) == Place::archimedean());
  CHECK(box.violation(Rational(1, 8)) == Place::finite(Prime(2)));
  CHECK(box.violation(Rational(1, 3)) == Place::finite(Prime(3)));
  CHECK(build_box(parse_poly("z^2")).prime_caps.empty());
}

TEST_CASE("orbit classification") {
  const auto phi = parse_poly("z^2 - 29/16");
  const auto box = build_box(phi);
  const auto r = classify_orbit(phi, Rational(-3, 4), box);
  REQUIRE(r.is_preperiodic());
  CHECK(std::get<Preperiodic>(r.kind).tail == 2);
  CHECK(std::get<Preperiodic>(r.kind).period == 3);
  const auto esc = classify_orbit(phi, Rational(3, 2), box);
  REQUIRE_FALSE(esc.is_preperiodic());
  CHECK(std::get<EscapesBox>(esc.kind).step >= 1);
  CHECK_THROWS_AS(classify_orbit(phi, Rational(5), box), ArgumentError);
}

TEST_CASE("worked example: z^2 - 29/16") {
  const auto set = enumerate_preperiodic(parse_poly("z^2 - 29/16"));
  CHECK(set.values() == rationals({"-7/4", "-5/4", "-3/4", "-1/4", "1/4", "3/4", "5/4", "7/4"}));
  CHECK(set.total() == 9);
  CHECK(set.includes_infinity);
  std::set<Rational> cycle;
  for (const auto& p : set.finite_points) {
    CHECK(p.period == 3);
    if (p.tail == 0) cycle.insert(p.x);
    else CHECK((p.tail == 1 || p.tail == 2));
  }
  CHECK(cycle == std::set<Rational>{Rational(5, 4), Rational(-1, 4), Rational(-7, 4)});
}

TEST_CASE("oracle fixtures for the quadratic family") {
  CHECK(values_of("z^2") == rationals({"-1", "0", "1"}));
  CHECK(values_of("z^2 + 1/4") == rationals({"-1/2", "1/2"}));
  CHECK(values_of("z^2 - 1") == rationals({"-1", "0", "1"}));
  CHECK(values_of("z^2 - 2") == rationals({"-2", "-1", "0", "1", "2"}));
  CHECK(values_of("z^2 - 12") == rationals({"-4", "-3", "3", "4"}));
  CHECK(values_of("z^2 + 1").empty());
  CHECK(values_of("z^2 - 21/16").size() == 8);
  CHECK(values_of("z^2 - 91/36").size() == 8);
}

TEST_CASE("higher degree") {
  // 0 is fixed, +-1/5 map to 0, +-(sqrt(26)/5) is irrational
  CHECK(values_of("z^3 - (1/25)z") == rationals({"-1/5", "0", "1/5"}));
  CHECK(values_of("z^3") == rationals({"-1", "0", "1"}));
  // Chebyshev-like: z^3 - 3z has the rational fixed/preperiodic points -2..2
  CHECK(values_of("z^3 - 3z") == rationals({"-2", "-1", "0", "1", "2"}));
}

TEST_CASE("size guard") {
  EnumerateOptions tight;
  tight.candidate_limit = 10;
  CHECK_THROWS_AS(enumerate_preperiodic(parse_poly("z^2 - 29/16"), tight), SizeGuardError);
}

TEST_CASE("property: enumeration matches a bounded brute-force search") {
  // Every rational of small height whose orbit repeats within 64 steps (at
  // bounded height) must be listed, and every listed point must be of that kind.
  for (int i = 0; i < 120; ++i) {
    const Polynomial phi = ppb::test::random_quadratic(6, 3);
    const auto set = enumerate_preperiodic(phi);
    const auto vals = set.values();
    const std::set<Rational> listed(vals.begin(), vals.end());
    for (long w = 1; w <= 12; ++w)
      for (long u = -60; u <= 60; ++u) {
        const Rational x = make_rational(Integer(u), Integer(w));
        std::set<Rational> seen;
        Rational y = x;
        bool repeats = false;
        for (int k = 0; k < 64 && abs(y) <= 100 && y.get_den() <= 1000000; ++k) {
          if (!seen.insert(y).second) {
            repeats = true;
            break;
          }
          y = phi(y);
        }
        CAPTURE(phi.to_string());
        CAPTURE(x.get_str());
        REQUIRE(repeats == (listed.count(x) == 1));
      }
  }
}

TEST_CASE("property: forward invariance and consistent tails") {
  for (int i = 0; i < 200; ++i) {
    const Polynomial phi = ppb::test::random_quadratic(12, 3);
    const auto set = enumerate_preperiodic(phi);
    std::map<Rational, PrePoint> by_x;
    for (const auto& p : set.finite_points) by_x.emplace(p.x, p);
    for (const auto& p : set.finite_points) {
      const auto it = by_x.find(phi(p.x));
      REQUIRE(it != by_x.end());
      REQUIRE(it->second.period == p.period);
      REQUIRE(it->second.tail == std::max(0L, p.tail - 1));
    }
  }
}

TEST_CASE("property: enumeration is equivariant under affine conjugation") {
  const Rational alphas[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(-3), Rational(1, 3)};
  for (int i = 0; i < 120; ++i) {
    const Polynomial phi = ppb::test::random_quadratic(8, 2);
    const Rational alpha = alphas[uniform(0, 5)];
    const Rational beta = make_rational(Integer(uniform(-3, 3)), Integer(uniform(1, 3)));
    // psi = h^-1 o phi o h, so Prep(psi) = h^-1(Prep(phi)) with the same dynamics
    const Polynomial psi = phi.conjugate_affine(alpha, beta);
    std::map<Rational, std::pair<long, long>> expected;
    for (const auto& p : enumerate_preperiodic(phi).finite_points)
      expected.emplace(Rational((p.x - beta) / alpha), std::make_pair(p.tail, p.period));
    std::map<Rational, std::pair<long, long>> got;
    for (const auto& p : enumerate_preperiodic(psi).finite_points) got.emplace(p.x, std::make_pair(p.tail, p.period));
    CAPTURE(psi.to_string());
    REQUIRE(got == expected);
  }
}

TEST_CASE("property: serial and parallel enumeration agree") {
  EnumerateOptions serial, parallel;
  serial.execution = Execution::Serial;
  parallel.execution = Execution::Parallel;
  for (int i = 0; i < 100; ++i) {
    const Polynomial phi = ppb::test::random_quadratic(30, 4);
    REQUIRE(enumerate_preperiodic(phi, serial).finite_points == enumerate_preperiodic(phi, parallel).finite_points);
  }
}

TEST_CASE("scan") {
  const ScanRange range{12, Rational(-3), Rational(1, 4)};
  EnumerateOptions serial;
  serial.execution = Execution::Serial;
  const auto a = scan_quadratic(range, serial);
  const auto b = scan_quadratic(range);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() == 3 * 144 + 36 + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].c == b[i].c);
    REQUIRE(a[i].finite_count == b[i].finite_count);
    if (i) REQUIRE(a[i - 1].c < a[i].c);
  }
  CHECK(a.front().c == -3);
  CHECK(a.back().c == Rational(1, 4));
  CHECK(scan_quadratic({2, Rational(1), Rational(0)}).empty());
  CHECK_THROWS_AS(scan_quadratic({0, Rational(-1), Rational(0)}), ArgumentError);
}
