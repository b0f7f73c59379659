#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pytrip/triple.hpp"

namespace pytrip {

/// Short leg a and gap d = c - b of a triple (a, b, b + d).
struct DiffSpec {
  u64 a = 0;
  u64 d = 0;

  friend constexpr bool operator==(const DiffSpec&, const DiffSpec&) = default;
};

/// nullopt unless a > d >= 1 and 2d divides a^2 - d^2.
std::optional<DiffSpec> make_diff_spec(u64 a, u64 d);

/// (a, (a^2 - d^2)/2d, (a^2 + d^2)/2d), or nullopt when that is not integral.
/// Throws DomainError unless a > d >= 1.
std::optional<Triple> triple_with_diff(u64 a, u64 d);
Triple triple_with_diff(const DiffSpec& spec);

enum class DiffKind { ppt, pt_only, invalid };

const char* to_string(DiffKind kind);

struct DiffClass {
  DiffKind kind = DiffKind::invalid;
  std::string reason;
};

/// Residue-class verdict for the family (a, b, b + d). d in {1, 2, 3, 8, 9}
/// use the closed residue rules; every other d falls back to the gcd of the
/// generated triple.
DiffClass diff_family_class(u64 a, u64 d);

/// Odd squares and doubled squares up to limit, ascending.
std::vector<u64> allowable_diffs(u64 limit);

bool is_allowable(u64 d);

}  // namespace pytrip
