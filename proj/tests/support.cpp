#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace pytrip::test {

const std::vector<Triple>& oracle_c_below_1e5() {
  static const std::vector<Triple> all = oracle_by_hypotenuse(100000);
  return all;
}

const std::vector<Triple>& ppts_c_below_1e5() {
  static const std::vector<Triple> ppts = [] {
    std::vector<Triple> out;
    for (const Triple& t : oracle_c_below_1e5())
      if (std::gcd(std::gcd(t.a, t.b), t.c) == 1) out.push_back(t);
    return out;
  }();
  return ppts;
}

std::vector<Triple> brute_triples_with_leg(u64 a) {
  std::vector<Triple> out;
  const u64 a2 = a * a;
  // c - b >= 1 forces a^2 >= 2b + 1.
  u64 c = 1;
  for (u64 b = 1; 2 * b + 1 <= a2; ++b) {
    const u64 s = a2 + b * b;
    while (c * c < s) ++c;
    if (c * c == s) out.push_back({a, b, c});
  }
  return out;
}

std::vector<std::pair<u64, u64>> brute_factor_pairs(u64 n) {
  std::vector<std::pair<u64, u64>> out;
  for (u64 u = 1; u * u <= n; ++u)
    if (n % u == 0) out.emplace_back(u, n / u);
  return out;
}

bool trial_division_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<Triple> naive_triples(u64 max_leg) {
  std::vector<Triple> out;
  for (u64 a = 1; a < max_leg; ++a)
    for (u64 b = a + 1; b < max_leg; ++b)
      for (u64 c = b + 1; c < a + b; ++c)
        if (a * a + b * b == c * c) out.push_back({a, b, c});
  return out;
}

const std::vector<Triple>& first_18_table() {
  static const std::vector<Triple> table{
      {3, 4, 5},      {5, 12, 13},    {7, 24, 25},    {8, 15, 17},    {9, 40, 41},    {11, 60, 61},
      {12, 35, 37},   {13, 84, 85},   {15, 112, 113}, {16, 63, 65},   {17, 144, 145}, {19, 180, 181},
      {20, 21, 29},   {20, 99, 101},  {21, 220, 221}, {23, 264, 265}, {24, 143, 145}, {25, 312, 313}};
  return table;
}

std::vector<u64> allowable_diffs_reached_below(u64 max_c) {
  std::vector<u64> out;
  // Odd d = n^2: (h, k) = (k + n, k), long leg 2hk, so n^2 < 2k^2.
  for (u64 n = 1; n * n < max_c; n += 2) {
    for (u64 k = 1;; ++k) {
      const u64 c = (k + n) * (k + n) + k * k;
      if (c >= max_c) break;
      if (n * n < 2 * k * k && std::gcd(k, n) == 1) {
        out.push_back(n * n);
        break;
      }
    }
  }
  // Even d = 2m^2: k = m, long leg h^2 - m^2, so (h - m)^2 > 2m^2.
  for (u64 m = 1; 2 * m * m < max_c; ++m) {
    for (u64 h = m + 1;; ++h) {
      const u64 c = h * h + m * m;
      if (c >= max_c) break;
      if ((h - m) * (h - m) > 2 * m * m && std::gcd(h, m) == 1 && (h + m) % 2 == 1) {
        out.push_back(2 * m * m);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pytrip::test
