#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <vector>

#include "pytrip/checked.hpp"

namespace pytrip {

/// Three positive integers with a^2 + b^2 = c^2. Leg order is kept as given;
/// use canonicalize() for (short, long, hypotenuse).
struct Triple {
  u64 a = 0;
  u64 b = 0;
  u64 c = 0;

  [[nodiscard]] u64 short_leg() const { return a < b ? a : b; }
  [[nodiscard]] u64 long_leg() const { return a < b ? b : a; }

  friend constexpr bool operator==(const Triple&, const Triple&) = default;
  friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

std::ostream& operator<<(std::ostream& os, const Triple& t);

/// Throws DomainError unless (a, b, c) satisfies the triple invariants exactly.
Triple make_triple(u64 a, u64 b, u64 c);

/// Exact a^2 + b^2 == c^2 for any 64-bit inputs (128-bit intermediates).
bool satisfies_pythagoras(u64 a, u64 b, u64 c);

struct TripleClass {
  bool primitive = false;
  u64 gcd = 0;
  u64 d = 0;        // c - long leg
  u64 d_prime = 0;  // c - short leg

  friend constexpr bool operator==(const TripleClass&, const TripleClass&) = default;
};

/// Classifies any three positive integers. The values are sorted internally, so
/// the hypotenuse may be listed anywhere. Returns nullopt for non-triples.
std::optional<TripleClass> classify(u64 x, u64 y, u64 z);
std::optional<TripleClass> classify(const Triple& t);

Triple canonicalize(const Triple& t);

[[nodiscard]] inline Triple scaled(const Triple& t, u64 k) {
  return {checked::mul(t.a, k), checked::mul(t.b, k), checked::mul(t.c, k)};
}

u64 gcd3(u64 x, u64 y, u64 z);
inline bool is_primitive(const Triple& t) { return gcd3(t.a, t.b, t.c) == 1; }

/// Brute-force search: every triple with a < b < max_leg, ascending (a, b).
/// Uses only the integer square root; no generator formulas.
std::vector<Triple> oracle_enumerate(u64 max_leg);

/// Brute-force search by hypotenuse: every canonical triple with c < max_c,
/// ascending (a, b). A two-pointer sweep over the legs for each c.
std::vector<Triple> oracle_by_hypotenuse(u64 max_c);

/// The first `count` primitive triples ordered by (short leg, long leg).
std::vector<Triple> first_ppts(std::size_t count);

}  // namespace pytrip
