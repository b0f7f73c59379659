#include "pytrip/euclid.hpp"

#include <algorithm>
#include <numeric>

namespace pytrip {
namespace {

void require_pair(EuclidPair p) {
  if (p.k == 0 || p.h <= p.k) throw DomainError("Euclid pair needs h > k > 0");
}

// Calls fn(pair, triple) for every pair whose legs are both below max_leg.
template <typename Fn>
void for_each_pair_below(u64 max_leg, bool primitive_only, Fn&& fn) {
  for (u64 k = 1;; ++k) {
    // Smallest even leg for this k is 2k(k + 1).
    if (checked::mul(2 * k, k + 1) >= max_leg) break;
    for (u64 h = k + 1;; ++h) {
      const Triple t = euclid_triple({h, k});
      if (t.a >= max_leg || t.b >= max_leg) break;
      if (!primitive_only || is_primitive_pair({h, k})) fn(EuclidPair{h, k}, t);
    }
  }
}

void sort_unique(std::vector<Triple>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const EuclidPair& p) {
  return os << '(' << p.h << ", " << p.k << ')';
}

Triple euclid_triple(EuclidPair p) {
  require_pair(p);
  const CheckedInt h2 = squared(p.h);
  const CheckedInt k2 = squared(p.k);
  return {(h2 - k2).value(), (CheckedInt{2} * p.h * p.k).value(), (h2 + k2).value()};
}

bool is_primitive_pair(EuclidPair p) {
  require_pair(p);
  return std::gcd(p.h, p.k) == 1 && ((p.h + p.k) & 1) == 1;
}

Triple euclid_odd_variant(EuclidPair p) {
  require_pair(p);
  if (p.h % 2 == 0 || p.k % 2 == 0) throw DomainError("odd variant needs h and k both odd");
  const CheckedInt h2 = squared(p.h);
  const CheckedInt k2 = squared(p.k);
  // h^2 - k^2 and h^2 + k^2 are both even for odd h, k.
  return {(CheckedInt{p.h} * p.k).value(), ((h2 - k2) / 2).value(), ((h2 + k2) / 2).value()};
}

EuclidPair invert_euclid(const Triple& t) {
  const auto cls = classify(t);
  if (!cls) throw DomainError("not a Pythagorean triple");
  if (!cls->primitive) throw DomainError("no integer generator pair for a non-primitive triple");
  const u64 even = t.a % 2 == 0 ? t.a : t.b;
  const u64 odd = t.a % 2 == 0 ? t.b : t.a;
  const u64 num = checked::add(t.c, odd);
  const u64 g = std::gcd(num, even);
  const EuclidPair p{num / g, even / g};
  // A primitive triple always inverts; the round trip guards the reduction.
  if (canonicalize(euclid_triple(p)) != canonicalize(t)) throw DomainError("inversion failed");
  return p;
}

std::vector<Triple> euclid_triples_with_legs_below(u64 max_leg) {
  std::vector<Triple> out;
  for_each_pair_below(max_leg, false, [&](EuclidPair, const Triple& t) { out.push_back(canonicalize(t)); });
  sort_unique(out);
  return out;
}

std::vector<Triple> triples_with_legs_below(u64 max_leg, bool primitive_only) {
  std::vector<Triple> out;
  for_each_pair_below(max_leg, true, [&](EuclidPair, const Triple& t) {
    const Triple base = canonicalize(t);
    if (primitive_only) {
      out.push_back(base);
      return;
    }
    for (u64 m = 1; base.b * m < max_leg; ++m) out.push_back(scaled(base, m));
  });
  sort_unique(out);
  return out;
}

}  // namespace pytrip
