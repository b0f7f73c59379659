#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pytrip/triple.hpp"

namespace pytrip {

struct PrimeVerdict {
  u64 n = 0;
  bool is_prime = false;
  /// Nontrivial factorisation, when trial division found one.
  std::optional<std::pair<u64, u64>> factor_witness;
  /// Miller-Rabin base proving compositeness when no small factor was found.
  std::optional<u64> compositeness_base;
};

/// Exact for every 64-bit n: trial division by small primes, then
/// Miller-Rabin with the first twelve prime bases (deterministic below 3.3e24).
PrimeVerdict is_prime(u64 n);
bool is_prime_u64(u64 n);

struct PrimeLegReport {
  Triple triple;
  bool b_divisible_by_12 = false;
  bool c_is_1_mod_4 = false;
};

/// The d = 1 triple (p, (p^2 - 1)/2, (p^2 + 1)/2) for a prime p > 3.
PrimeLegReport prime_leg_ppt(u64 p);

struct Ends13Result {
  Triple triple;
  u64 c_mod_100 = 0;
  bool c_is_prime = false;
  /// k = 0 or 12 (mod 13): 13 divides c.
  bool excluded = false;
};

/// a = 5(2k + 1), c = (a^2 + 1)/2 = 50k(k + 1) + 13.
Ends13Result ends13_family(u64 k);

struct Ends1Result {
  Triple triple;
  bool c_is_prime = false;
};

/// d = 1 triple for odd a ending in 1 or 9; c always ends in 1.
Ends1Result ends1_family(u64 a);

struct Ends5Record {
  u64 a = 0;
  u64 c = 0;
  bool c_ends_in_5 = false;
};

/// d = 1 hypotenuse for a ending in 3 or 7 (a > 3); always ends in 5.
Ends5Record ends5_obstruction(u64 a);

/// Primitive triples with prime short leg and prime hypotenuse, c <= max_c.
std::vector<Triple> prime_leg_and_hyp(u64 max_c);

/// x < y with x^2 + y^2 = p for a prime p = 1 (mod 4).
std::pair<u64, u64> sum_two_squares(u64 p);

struct OddPrimeCount {
  u64 n = 0;
  u64 odd_primes = 0;
  u64 odd_integers = 0;  // |{1, 3, ..., n}|

  /// Primes <= n including 2.
  [[nodiscard]] u64 all_primes() const { return n >= 2 ? odd_primes + 1 : 0; }
  [[nodiscard]] double percent() const {
    return 100.0 * static_cast<double>(odd_primes) / static_cast<double>(odd_integers);
  }
};

/// Counts the odd primes in {1, 3, ..., n} with a sieve, n odd and >= 3.
OddPrimeCount odd_prime_count(u64 n);

}  // namespace pytrip
