#include "pytrip/verify.hpp"

#include <algorithm>

#include "pytrip/difference.hpp"
#include "pytrip/euclid.hpp"
#include "pytrip/legfactor.hpp"

namespace pytrip {
namespace {

void sort_unique(std::vector<Triple>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool subset(const std::vector<Triple>& part, const std::vector<Triple>& whole) {
  return std::includes(whole.begin(), whole.end(), part.begin(), part.end());
}

}  // namespace

bool GeneratorCheck::all_sound() const {
  return subset(euclid, oracle) && subset(difference, oracle) && subset(leg_factor, oracle);
}

GeneratorCheck verify_generators(u64 max_leg) {
  GeneratorCheck r;
  r.max_leg = max_leg;
  r.oracle = oracle_enumerate(max_leg);
  r.euclid = euclid_triples_with_legs_below(max_leg);

  for (u64 a = 3; a < max_leg; ++a) {
    for (u64 d = 1; d < a; ++d) {
      const auto t = triple_with_diff(a, d);
      if (t && t->b < max_leg) r.difference.push_back(canonicalize(*t));
    }
    for (const LegTriple& lt : triples_for_leg(a))
      if (lt.triple.b < max_leg) r.leg_factor.push_back(canonicalize(lt.triple));
  }
  sort_unique(r.difference);
  sort_unique(r.leg_factor);

  r.combined = r.euclid;
  r.combined.insert(r.combined.end(), r.difference.begin(), r.difference.end());
  r.combined.insert(r.combined.end(), r.leg_factor.begin(), r.leg_factor.end());
  sort_unique(r.combined);
  return r;
}

}  // namespace pytrip
