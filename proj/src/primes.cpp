#include "pytrip/primes.hpp"

#include <array>
#include <numeric>

namespace pytrip {
namespace {

constexpr u64 kTrialLimit = 1u << 16;

u64 mul_mod(u64 x, u64 y, u64 m) {
  return static_cast<u64>(static_cast<unsigned __int128>(x) * y % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// True when `base` proves n composite. n odd, n > base.
bool is_witness(u64 n, u64 base) {
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  u64 x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

constexpr std::array<u64, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

u64 d1_hypotenuse(u64 a) { return (squared(a) + 1).value() / 2; }

}  // namespace

PrimeVerdict is_prime(u64 n) {
  PrimeVerdict v{n, false, std::nullopt, std::nullopt};
  if (n < 2) return v;
  if (n < 4) {
    v.is_prime = true;
    return v;
  }
  if (n % 2 == 0) {
    v.factor_witness = std::pair{u64{2}, n / 2};
    return v;
  }
  const u64 root = isqrt(n);
  const u64 limit = root < kTrialLimit ? root : kTrialLimit;
  for (u64 p = 3; p <= limit; p += 2) {
    if (n % p == 0) {
      v.factor_witness = std::pair{p, n / p};
      return v;
    }
  }
  if (root <= kTrialLimit) {
    v.is_prime = true;
    return v;
  }
  for (u64 base : kBases) {
    if (is_witness(n, base)) {
      v.compositeness_base = base;
      return v;
    }
  }
  v.is_prime = true;
  return v;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 37 * 37) return true;
  for (u64 base : kBases)
    if (is_witness(n, base)) return false;
  return true;
}

PrimeLegReport prime_leg_ppt(u64 p) {
  if (p <= 3 || !is_prime_u64(p)) throw DomainError("prime_leg_ppt needs a prime p > 3");
  const u64 c = d1_hypotenuse(p);
  PrimeLegReport r{{p, c - 1, c}, false, false};
  r.b_divisible_by_12 = r.triple.b % 12 == 0;
  r.c_is_1_mod_4 = c % 4 == 1;
  if (!r.b_divisible_by_12 || !r.c_is_1_mod_4) throw std::logic_error("prime leg divisibility violated");
  return r;
}

Ends13Result ends13_family(u64 k) {
  if (k == 0) throw DomainError("ends13 family needs k >= 1");
  const u64 a = (CheckedInt{5} * (CheckedInt{2} * k + 1)).value();
  const u64 c = d1_hypotenuse(a);
  Ends13Result r{{a, c - 1, c}, c % 100, false, false};
  r.excluded = k % 13 == 0 || k % 13 == 12;
  r.c_is_prime = is_prime_u64(c);
  return r;
}

Ends1Result ends1_family(u64 a) {
  if (a < 9 || (a % 10 != 1 && a % 10 != 9)) throw DomainError("ends1 family needs a >= 9 ending in 1 or 9");
  const u64 c = d1_hypotenuse(a);
  if (c % 10 != 1) throw std::logic_error("hypotenuse does not end in 1");
  return {{a, c - 1, c}, is_prime_u64(c)};
}

Ends5Record ends5_obstruction(u64 a) {
  if (a <= 3 || (a % 10 != 3 && a % 10 != 7)) throw DomainError("ends5 check needs a > 3 ending in 3 or 7");
  const u64 c = d1_hypotenuse(a);
  return {a, c, c % 10 == 5};
}

std::vector<Triple> prime_leg_and_hyp(u64 max_c) {
  std::vector<Triple> out;
  // A prime short leg forces d = 1, so only (p, (p^2-1)/2, (p^2+1)/2) qualifies.
  for (u64 p = 3;; p += 2) {
    const u64 c = d1_hypotenuse(p);
    if (c > max_c) break;
    if (is_prime_u64(p) && is_prime_u64(c)) out.push_back({p, c - 1, c});
  }
  return out;
}

std::pair<u64, u64> sum_two_squares(u64 p) {
  if (p % 4 != 1 || !is_prime_u64(p)) throw DomainError("sum_two_squares needs a prime p = 1 (mod 4)");
  for (u64 x = 1; 2 * x * x < p; ++x) {
    if (auto y = exact_sqrt(p - x * x)) return {x, *y};
  }
  throw std::logic_error("no two-square decomposition found");
}

OddPrimeCount odd_prime_count(u64 n) {
  if (n < 3 || n % 2 == 0) throw DomainError("odd_prime_count needs odd n >= 3");
  // composite[i] describes 2i + 1.
  std::vector<bool> composite(n / 2 + 1, false);
  composite[0] = true;
  for (u64 i = 1; (2 * i + 1) * (2 * i + 1) <= n; ++i) {
    if (composite[i]) continue;
    const u64 p = 2 * i + 1;
    for (u64 m = p * p; m <= n; m += 2 * p) composite[m / 2] = true;
  }
  OddPrimeCount r{n, 0, n / 2 + 1};
  for (bool c : composite) r.odd_primes += c ? 0 : 1;
  return r;
}

}  // namespace pytrip
