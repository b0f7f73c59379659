#pragma once

#include <vector>

#include "pytrip/triple.hpp"

namespace pytrip {

/// Canonical outputs of each generator restricted to legs below a bound,
/// compared against the brute-force oracle.
struct GeneratorCheck {
  u64 max_leg = 0;
  std::vector<Triple> oracle;
  std::vector<Triple> euclid;      // every pair h > k > 0
  std::vector<Triple> difference;  // every valid (a, d)
  std::vector<Triple> leg_factor;  // every u, v split of every leg
  std::vector<Triple> combined;    // union of the three

  [[nodiscard]] bool union_matches() const { return combined == oracle; }
  /// Each generator only produces oracle members.
  [[nodiscard]] bool all_sound() const;
};

GeneratorCheck verify_generators(u64 max_leg);

}  // namespace pytrip
