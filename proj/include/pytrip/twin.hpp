#pragma once

#include <optional>
#include <vector>

#include "pytrip/euclid.hpp"

namespace pytrip {

/// Two consecutive triples of the form (a, a + 1, c) and their generator pairs.
struct TwinWindow {
  Triple prev{3, 4, 5};
  Triple curr{20, 21, 29};
  EuclidPair prev_pair{2, 1};
  EuclidPair curr_pair{5, 2};

  /// Shifts the window one term forward using both recursions.
  void advance();
};

/// (a, a + 1, c) when 2c^2 - 1 is a perfect square, otherwise nullopt.
std::optional<Triple> twin_from_c(u64 c);

/// (2h' + h, 2k' + k) from the pairs of two consecutive twin triples.
EuclidPair next_pair(EuclidPair prev, EuclidPair curr);

/// a'' = 6a' - a + 2, c'' = 6c' - c. Throws DomainError if the result is not
/// a triple, i.e. the inputs were not consecutive twins.
Triple next_twin(u64 prev_a, u64 curr_a, u64 prev_c, u64 curr_c);

/// The first `count` twin triples starting from (3, 4, 5).
std::vector<Triple> twin_sequence(std::size_t count);

}  // namespace pytrip
