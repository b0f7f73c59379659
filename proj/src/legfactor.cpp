#include "pytrip/legfactor.hpp"

namespace pytrip {

std::vector<FactorSplit> uv_splits(u64 a) {
  if (a < 3) throw DomainError("leg must be at least 3");
  const u64 a2 = checked::square(a);
  std::vector<FactorSplit> out;
  for (u64 u = 1; u < a; ++u) {
    if (a2 % u != 0) continue;
    const u64 v = a2 / u;
    if (((u ^ v) & 1) == 0) out.push_back({u, v});
  }
  return out;
}

std::vector<LegTriple> triples_for_leg(u64 a) {
  std::vector<LegTriple> out;
  for (const FactorSplit& s : uv_splits(a)) {
    const Triple t{a, (s.v - s.u) / 2, (s.u + s.v) / 2};
    out.push_back({t, s, is_primitive(t)});
  }
  return out;
}

std::optional<Triple> triple_for_leg_and_diff(u64 a, u64 d) {
  if (d == 0 || d >= a) throw DomainError("requires 0 < d < a");
  const u64 a2 = checked::square(a);
  if (a2 % d != 0) throw DomainError("d must divide a^2");
  const u64 q = a2 / d - d;
  if (q % 2 != 0) return std::nullopt;
  const u64 b = q / 2;
  return Triple{a, b, b + d};
}

std::vector<LegDiffRow> leg_diff_table(u64 a) {
  if (a < 2) throw DomainError("leg must be at least 2");
  const u64 a2 = checked::square(a);
  std::vector<LegDiffRow> out;
  for (u64 d = 1; d < a; ++d) {
    if (a2 % d != 0) continue;
    out.push_back({d, a2 / d - d, triple_for_leg_and_diff(a, d)});
  }
  return out;
}

}  // namespace pytrip
