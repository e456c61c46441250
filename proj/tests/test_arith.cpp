#include <doctest.h>

#include <cstdlib>

#include "ppb/arith.hpp"
#include "ppb/real.hpp"
#include "support.hpp"

using namespace ppb;
using ppb::test::random_nonzero;
using ppb::test::uniform;

TEST_CASE("make_rational canonicalizes and rejects zero denominators") {
  CHECK(make_rational(Integer(6), Integer(-4)) == Rational(-3, 2));
  CHECK(to_string(make_rational(Integer(6), Integer(-4))) == "-3/2");
  CHECK(to_string(make_rational(Integer(4), Integer(2))) == "2");
  CHECK_THROWS_AS(make_rational(Integer(1), Integer(0)), ArgumentError);
}

TEST_CASE("is_prime agrees with a sieve below 10^5") {
  const int n = 100000;
  std::vector<bool> composite(n, false);
  for (int i = 2; i * i < n; ++i)
    if (!composite[i])
      for (int j = i * i; j < n; j += i) composite[j] = true;
  for (int i = 0; i < n; ++i) REQUIRE(is_prime(Integer(i)) == (i >= 2 && !composite[i]));
}

TEST_CASE("is_prime on large inputs") {
  CHECK(is_prime(Integer("2305843009213693951")));    // 2^61 - 1
  CHECK_FALSE(is_prime(Integer("3215031751")));       // strong pseudoprime to 2,3,5,7
  CHECK_FALSE(is_prime(Integer("3825123056546413051")));
  CHECK_THROWS_AS(is_prime(Integer("100000000000000000000000039")), SizeGuardError);
}

TEST_CASE("Prime and Place validation") {
  CHECK_THROWS_AS(Prime(1), ArgumentError);
  CHECK_THROWS_AS(Prime(91), ArgumentError);
  CHECK(Prime(2) < Prime(3));
  CHECK(Place::archimedean().name() == "inf");
  CHECK(Place::finite(Prime(7)).name() == "7");
  CHECK_THROWS_AS(Place::archimedean().prime(), ArgumentError);
  CHECK(Place::finite(Prime(5)) == Place::finite(Prime(5)));
  CHECK_FALSE(Place::finite(Prime(5)) == Place::archimedean());
}

TEST_CASE("padic valuations") {
  const Prime two(2), three(3);
  CHECK(padic_valuation(Rational(-29, 16), two).value() == -4);
  CHECK(padic_valuation(Rational(12), two).value() == 2);
  CHECK(padic_valuation(Rational(12), three).value() == 1);
  CHECK(padic_valuation(Rational(0), two).is_infinite());
  CHECK(padic_valuation(Rational(0), two) > padic_valuation(Rational(1 << 20), two));
  CHECK_THROWS_AS(padic_valuation(Rational(0), two).value(), ArgumentError);
  CHECK_THROWS_AS(valuation_nonzero(Rational(0), two), ArgumentError);
}

TEST_CASE("property: valuation is additive and ultrametric") {
  const Prime ps[] = {Prime(2), Prime(3), Prime(5), Prime(7)};
  for (int i = 0; i < 2000; ++i) {
    const Rational x = random_nonzero(500), y = random_nonzero(500);
    for (const auto& p : ps) {
      REQUIRE(valuation_nonzero(Rational(x * y), p) == valuation_nonzero(x, p) + valuation_nonzero(y, p));
      const Rational s = x + y;
      if (s != 0)
        REQUIRE(valuation_nonzero(s, p) >= std::min(valuation_nonzero(x, p), valuation_nonzero(y, p)));
    }
  }
}

TEST_CASE("abs_at and the product formula") {
  CHECK(std::get<Rational>(abs_at(Rational(-29, 16), Place::archimedean())) == Rational(29, 16));
  const auto a2 = std::get<LogAbs>(abs_at(Rational(-29, 16), Place::finite(Prime(2))));
  CHECK(a2 == LogAbs(Prime(2), Rational(4)));
  CHECK(a2.to_string() == "2^(4)");
  CHECK(LogAbs(Prime(3), Rational(-1, 2)).to_string() == "3^(-1/2)");
  CHECK_THROWS_AS(abs_at(Rational(0), Place::finite(Prime(2))), ArgumentError);
  CHECK(verify_product_formula(Rational(-29, 16)));
  CHECK_THROWS_AS(verify_product_formula(Rational(0)), ArgumentError);
}

TEST_CASE("property: product formula on 10^4 random rationals") {
  for (int i = 0; i < 10000; ++i) REQUIRE(verify_product_formula(random_nonzero(1000000)));
}

TEST_CASE("LogAbs comparison is exact across bases") {
  const Prime two(2), three(3), five(5);
  CHECK(compare(LogAbs(two, Rational(1)), LogAbs(three, Rational(1))) < 0);
  CHECK(compare(LogAbs(two, Rational(2)), LogAbs(two, Rational(2))) == 0);
  // 2^(3/2) = sqrt(8) < 3 = 3^1, 2^(2) = 4 = 4
  CHECK(compare(LogAbs(two, Rational(3, 2)), LogAbs(three, Rational(1))) < 0);
  // 8^(1/3) vs 2: 2^1 == 8... expressed as 2^(1) and 2^(3/3)
  CHECK(compare(LogAbs(two, make_rational(Integer(3), Integer(3))), LogAbs(two, Rational(1))) == 0);
  // 2^10 = 1024 > 1000 > 5^4 = 625
  CHECK(compare(LogAbs(two, Rational(10)), LogAbs(five, Rational(4))) > 0);
  CHECK(compare(LogAbs(two, Rational(-1)), LogAbs(five, Rational(-1))) > 0);
  const auto prod = LogAbs(two, Rational(1, 2)) * LogAbs(two, Rational(1, 3));
  CHECK(prod == LogAbs(two, Rational(5, 6)));
  CHECK_THROWS_AS(LogAbs(two, Rational(1)) * LogAbs(three, Rational(1)), ArgumentError);
}

TEST_CASE("property: LogAbs order agrees with real logs and is antisymmetric") {
  const long primes[] = {2, 3, 5, 7, 11, 13};
  for (int i = 0; i < 2000; ++i) {
    const LogAbs a(Prime(primes[uniform(0, 5)]), make_rational(Integer(uniform(-40, 40)), Integer(uniform(1, 9))));
    const LogAbs b(Prime(primes[uniform(0, 5)]), make_rational(Integer(uniform(-40, 40)), Integer(uniform(1, 9))));
    const int c = compare(a, b);
    REQUIRE(c == -compare(b, a));
    const Real la = log(Real(a.base.value())) * Real(a.exponent);
    const Real lb = log(Real(b.base.value())) * Real(b.exponent);
    if (c != 0) REQUIRE((la < lb) == (c < 0));
    else REQUIRE(Real::sub(la, lb).to_double() == doctest::Approx(0.0));
  }
}

TEST_CASE("factor") {
  CHECK(factor(Integer(1)).empty());
  CHECK(factor(Integer(360)) == std::vector<PrimePower>{{Integer(2), 3}, {Integer(3), 2}, {Integer(5), 1}});
  CHECK(factor(Integer(144)) == std::vector<PrimePower>{{Integer(2), 4}, {Integer(3), 2}});
  CHECK(factor(Integer(1048583) * 1048583 * 1048583) == std::vector<PrimePower>{{Integer(1048583), 3}});
  // large prime cofactor above the trial-division limit
  CHECK(factor(Integer("4611686014132420609")) == std::vector<PrimePower>{{Integer("2147483647"), 2}});
  CHECK(prime_divisors(Integer(-90)) == std::vector<Integer>{Integer(2), Integer(3), Integer(5)});
  // product of two primes above 2^20 cannot be split by trial division
  CHECK_THROWS_AS(factor(Integer(1048583) * Integer(1048589)), SizeGuardError);
  CHECK_THROWS_AS(factor(Integer(0)), ArgumentError);
  CHECK_THROWS_AS(factor(Integer(-6)), ArgumentError);
}

TEST_CASE("property: factor reconstructs n") {
  for (int i = 0; i < 500; ++i) {
    const Integer n(uniform(1, 1L << 36));
    Integer prod(1);
    for (const auto& pp : factor(n)) {
      REQUIRE(is_prime(pp.prime));
      prod *= pow(pp.prime, pp.exponent);
    }
    REQUIRE(prod == n);
  }
}

TEST_CASE("exact powers") {
  CHECK(pow(Integer(3), 5) == 243);
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK(pow(Rational(5), 0) == 1);
  CHECK_THROWS_AS(pow(Rational(0), -1), ArgumentError);
}

TEST_CASE("Real precision and directed rounding") {
  CHECK(configured_precision() >= 128);
  CHECK(working_precision() == configured_precision() + 64);
  const Real third_up(Rational(1, 3), Rounding::Up), third_down(Rational(1, 3), Rounding::Down);
  CHECK(third_down < third_up);
  CHECK(Real::mul(third_up, Real(3), Rounding::Up) > Real(1));
  CHECK(Real::mul(third_down, Real(3), Rounding::Down) < Real(1));
  CHECK(log(Real(2), Rounding::Down) < log(Real(2), Rounding::Up));
  CHECK(Real(54).to_string() == "54");
  CHECK(Real(Rational(7, 2)).ceil() == 4);
  CHECK(Real(-3).ceil() == -3);
  CHECK(log_base(Real(8), 2, Rounding::Down) <= Real(3));
  CHECK(log_base(Real(8), 2, Rounding::Up) >= Real(3));
  CHECK(log_base(Real(81), 3, Rounding::Up) == Real(4));
  CHECK(log_base(Real(82), 3, Rounding::Down) > Real(4));
  CHECK(sqrt(Real(2)).to_string(10) == "1.414213562");
}
