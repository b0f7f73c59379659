#include "doctest.h"
#include "pytrip/primes.hpp"
#include "support.hpp"

using namespace pytrip;

TEST_CASE("is_prime examples and witnesses") {
  CHECK(is_prime(761).is_prime);
  const PrimeVerdict v = is_prime(4901);
  CHECK_FALSE(v.is_prime);
  REQUIRE(v.factor_witness);
  CHECK(v.factor_witness->first * v.factor_witness->second == 4901);
  CHECK(v.factor_witness->first == 13);
  CHECK_FALSE(is_prime(1).is_prime);
  CHECK_FALSE(is_prime(0).is_prime);
  CHECK(is_prime(2).is_prime);
  CHECK_FALSE(is_prime(3281).is_prime);
  for (u64 p : {1201u, 1301u, 7321u, 113u, 313u, 613u, 1013u}) CHECK(is_prime(p).is_prime);
}

TEST_CASE("is_prime agrees with trial division below 2e5") {
  for (u64 n = 0; n < 200000; ++n) {
    const bool expected = test::trial_division_prime(n);
    REQUIRE(is_prime(n).is_prime == expected);
    REQUIRE(is_prime_u64(n) == expected);
  }
}

TEST_CASE("is_prime on the full 64-bit range") {
  CHECK(is_prime((u64{1} << 61) - 1).is_prime);
  CHECK(is_prime(18446744073709551557ull).is_prime);  // largest 64-bit prime
  CHECK(is_prime_u64(18446744073709551557ull));
  // Strong pseudoprime to bases 2, 3, 5, 7.
  CHECK_FALSE(is_prime_u64(3215031751ull));
  CHECK_FALSE(is_prime(3215031751ull).is_prime);
  // Product of two 32-bit primes: no small factor, Miller-Rabin certificate.
  const PrimeVerdict semi = is_prime(4294967291ull * 4294967279ull);
  CHECK_FALSE(semi.is_prime);
  CHECK_FALSE(semi.factor_witness);
  CHECK(semi.compositeness_base);
  CHECK_FALSE(is_prime_u64(4294967291ull * 4294967279ull));
  CHECK_FALSE(is_prime_u64(~u64{0}));
}

TEST_CASE("prime_leg_ppt") {
  CHECK(prime_leg_ppt(5).triple == Triple{5, 12, 13});
  CHECK(prime_leg_ppt(7).triple == Triple{7, 24, 25});
  CHECK(prime_leg_ppt(11).triple == Triple{11, 60, 61});
  CHECK(prime_leg_ppt(11).b_divisible_by_12);
  CHECK_THROWS_AS(prime_leg_ppt(3), DomainError);
  CHECK_THROWS_AS(prime_leg_ppt(9), DomainError);

  for (u64 p = 5; p <= 10000; p += 2) {
    if (!test::trial_division_prime(p)) continue;
    const PrimeLegReport r = prime_leg_ppt(p);
    REQUIRE(is_primitive(r.triple));
    REQUIRE(r.triple.b % 12 == 0);
    REQUIRE(r.triple.c % 4 == 1);
  }
}

TEST_CASE("ends13 family") {
  const Ends13Result k1 = ends13_family(1);
  CHECK(k1.triple == Triple{15, 112, 113});
  CHECK(k1.c_is_prime);
  const Ends13Result k5 = ends13_family(5);
  CHECK(k5.triple.a == 55);
  CHECK(k5.triple.c == 1513);
  CHECK(k5.triple.c == 17 * 89);
  CHECK_FALSE(k5.c_is_prime);
  const Ends13Result k12 = ends13_family(12);
  CHECK(k12.triple.a == 125);
  CHECK(k12.triple.c % 13 == 0);
  CHECK(k12.excluded);
  CHECK_THROWS_AS(ends13_family(0), DomainError);

  for (u64 k = 1; k <= 10000; ++k) {
    const Ends13Result r = ends13_family(k);
    REQUIRE(r.c_mod_100 == 13);
    REQUIRE(r.triple.c % 100 == 13);
    REQUIRE(r.excluded == (r.triple.c % 13 == 0));
    REQUIRE(satisfies_pythagoras(r.triple.a, r.triple.b, r.triple.c));
  }
}

TEST_CASE("ends1 family") {
  CHECK(ends1_family(39).triple == Triple{39, 760, 761});
  CHECK(ends1_family(39).c_is_prime);
  CHECK(ends1_family(99).triple == Triple{99, 4900, 4901});
  CHECK_FALSE(ends1_family(99).c_is_prime);
  CHECK(ends1_family(121).triple == Triple{121, 7320, 7321});
  CHECK(ends1_family(121).c_is_prime);
  CHECK(ends1_family(49).c_is_prime);
  CHECK(ends1_family(51).c_is_prime);
  CHECK_FALSE(ends1_family(81).c_is_prime);
  CHECK_THROWS_AS(ends1_family(23), DomainError);
  CHECK_THROWS_AS(ends1_family(1), DomainError);
  for (u64 a = 9; a <= 10000; ++a) {
    if (a % 10 != 1 && a % 10 != 9) continue;
    REQUIRE(ends1_family(a).triple.c % 10 == 1);
  }
}

TEST_CASE("ends5 obstruction") {
  CHECK(ends5_obstruction(7).c == 25);
  CHECK(ends5_obstruction(13).c == 85);
  CHECK(ends5_obstruction(23).c == 265);
  CHECK_THROWS_AS(ends5_obstruction(3), DomainError);
  CHECK_THROWS_AS(ends5_obstruction(11), DomainError);
  for (u64 a = 7; a <= 10000; ++a)
    if (a % 10 == 3 || a % 10 == 7) REQUIRE(ends5_obstruction(a).c_ends_in_5);
}

TEST_CASE("prime_leg_and_hyp") {
  const std::vector<Triple> first{{3, 4, 5}, {5, 12, 13}, {11, 60, 61}, {19, 180, 181}};
  CHECK(prime_leg_and_hyp(200) == first);
  CHECK(prime_leg_and_hyp(4).empty());

  // Independent scan of the c < 1e5 oracle for prime short leg and prime c.
  std::vector<Triple> expected;
  for (const Triple& t : test::ppts_c_below_1e5())
    if (t.c <= 1000 && test::trial_division_prime(t.a) && test::trial_division_prime(t.c)) expected.push_back(t);
  CHECK(prime_leg_and_hyp(1000) == expected);
  auto with = first;
  with.push_back({29, 420, 421});
  CHECK(prime_leg_and_hyp(1000) == with);
}

TEST_CASE("a prime short leg forces d = 1") {
  for (const Triple& t : test::ppts_c_below_1e5())
    if (test::trial_division_prime(t.a)) REQUIRE(t.c - t.b == 1);
}

TEST_CASE("sum_two_squares") {
  CHECK(sum_two_squares(13) == std::pair<u64, u64>{2, 3});
  CHECK(sum_two_squares(5) == std::pair<u64, u64>{1, 2});
  CHECK(sum_two_squares(29) == std::pair<u64, u64>{2, 5});
  CHECK_THROWS_AS(sum_two_squares(25), DomainError);
  for (u64 p = 3; p < 100000; p += 2) {
    if (!test::trial_division_prime(p)) continue;
    if (p % 4 == 1) {
      const auto [x, y] = sum_two_squares(p);
      REQUIRE(x < y);
      REQUIRE(x * x + y * y == p);
    } else {
      REQUIRE_THROWS_AS(sum_two_squares(p), DomainError);
    }
  }
}

TEST_CASE("odd prime counts") {
  auto brute = [](u64 n) {
    u64 count = 0;
    for (u64 m = 3; m <= n; m += 2) count += test::trial_division_prime(m) ? 1 : 0;
    return count;
  };
  const OddPrimeCount c99 = odd_prime_count(99);
  CHECK(c99.odd_primes == 24);
  CHECK(c99.odd_integers == 50);
  CHECK(c99.percent() == 48.0);
  const OddPrimeCount c999 = odd_prime_count(999);
  CHECK(c999.odd_primes == 167);
  CHECK(c999.percent() == 33.4);
  const OddPrimeCount c9999 = odd_prime_count(9999);
  CHECK(c9999.odd_primes == brute(9999));
  CHECK(c9999.odd_primes == 1228);
  CHECK(c9999.all_primes() == 1229);
  const OddPrimeCount c99999 = odd_prime_count(99999);
  CHECK(c99999.odd_primes == brute(99999));
  CHECK(c99999.odd_primes == 9591);
  CHECK(c99999.all_primes() == 9592);
  CHECK_THROWS_AS(odd_prime_count(100), DomainError);
}
