// Test-only helpers: brute-force routes kept independent of the library code
// they check, plus a cached hypotenuse-bounded oracle shared across suites.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pytrip/triple.hpp"

namespace pytrip::test {

/// All canonical triples with c < 1e5, computed once per process.
const std::vector<Triple>& oracle_c_below_1e5();

/// Primitive subset of the above.
const std::vector<Triple>& ppts_c_below_1e5();

/// Triples (a, b, c) with b ranging over every positive value allowed by
/// c - b >= 1, c tracked incrementally; no square roots or formulas.
std::vector<Triple> brute_triples_with_leg(u64 a);

/// Every (u, v) with u * v == n and u <= v, by scanning u.
std::vector<std::pair<u64, u64>> brute_factor_pairs(u64 n);

bool trial_division_prime(u64 n);

/// The 18 smallest primitive triples by (short leg, long leg), written out.
const std::vector<Triple>& first_18_table();

/// Allowable differences whose smallest primitive triple has c < max_c, found
/// from the generator pairs directly: d = n^2 (n odd) needs h - k = n, and
/// d = 2m^2 needs k = m, with the odd leg and even leg in the right order.
std::vector<u64> allowable_diffs_reached_below(u64 max_c);

/// Naive triple loop a < b < max_leg, c in (b, a + b).
std::vector<Triple> naive_triples(u64 max_leg);

}  // namespace pytrip::test
