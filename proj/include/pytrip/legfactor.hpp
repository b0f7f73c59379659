#pragma once

#include <optional>
#include <vector>

#include "pytrip/triple.hpp"

namespace pytrip {

/// a^2 = u * v with u < v of equal parity; gives b = (v - u)/2, c = (u + v)/2.
struct FactorSplit {
  u64 u = 0;
  u64 v = 0;

  friend constexpr bool operator==(const FactorSplit&, const FactorSplit&) = default;
};

std::vector<FactorSplit> uv_splits(u64 a);

/// A triple sharing the fixed leg a, in generation order (a, b, c).
struct LegTriple {
  Triple triple;
  FactorSplit split;
  bool primitive = false;

  /// Equals split.u.
  [[nodiscard]] u64 c_minus_b() const { return triple.c - triple.b; }
  [[nodiscard]] u64 c_minus_a() const { return triple.c - triple.a; }
};

/// Every triple having a as a leg, ascending by u.
std::vector<LegTriple> triples_for_leg(u64 a);

/// (a, (a^2/d - d)/2, b + d) when a^2/d - d is even, nullopt when odd.
/// Throws DomainError when d >= a or d does not divide a^2.
std::optional<Triple> triple_for_leg_and_diff(u64 a, u64 d);

/// One row per divisor d < a of a^2: the quantity a^2/d - d and its outcome.
struct LegDiffRow {
  u64 d = 0;
  u64 quotient_minus_d = 0;
  std::optional<Triple> triple;

  [[nodiscard]] bool even() const { return quotient_minus_d % 2 == 0; }
};

std::vector<LegDiffRow> leg_diff_table(u64 a);

}  // namespace pytrip
