#pragma once

#include <vector>

#include "pytrip/triple.hpp"

namespace pytrip {

/// Generator pair for (h^2 - k^2, 2hk, h^2 + k^2); requires h > k > 0.
struct EuclidPair {
  u64 h = 0;
  u64 k = 0;

  friend constexpr bool operator==(const EuclidPair&, const EuclidPair&) = default;
  friend constexpr auto operator<=>(const EuclidPair&, const EuclidPair&) = default;
};

std::ostream& operator<<(std::ostream& os, const EuclidPair& p);

/// Generation order (h^2 - k^2, 2hk, h^2 + k^2); not canonicalized.
Triple euclid_triple(EuclidPair p);

/// gcd(h, k) == 1 and exactly one of h, k odd.
bool is_primitive_pair(EuclidPair p);

/// (hk, (h^2 - k^2)/2, (h^2 + k^2)/2) for h > k > 0 both odd.
Triple euclid_odd_variant(EuclidPair p);

/// Recovers the coprime opposite-parity pair of a primitive triple by reducing
/// (c + odd leg) / even leg to lowest terms. Legs may be in either order.
/// Throws DomainError for non-triples and non-primitive triples.
EuclidPair invert_euclid(const Triple& t);

/// Canonical triples produced by every pair h > k > 0 whose legs are both
/// below max_leg (primitive or not), ascending and de-duplicated.
std::vector<Triple> euclid_triples_with_legs_below(u64 max_leg);

/// Every triple with both legs below max_leg, built from primitive pairs and
/// their multiples. Canonical, ascending (a, b).
std::vector<Triple> triples_with_legs_below(u64 max_leg, bool primitive_only = false);

}  // namespace pytrip
