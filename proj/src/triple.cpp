#include "pytrip/triple.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace pytrip {

std::ostream& operator<<(std::ostream& os, const Triple& t) {
  return os << '(' << t.a << ", " << t.b << ", " << t.c << ')';
}

bool satisfies_pythagoras(u64 a, u64 b, u64 c) {
  using u128 = unsigned __int128;
  if (a >= c || b >= c) return false;
  // c^2 - a^2 == b^2 never leaves 128 bits.
  return u128{c} * c - u128{a} * a == u128{b} * b;
}

Triple make_triple(u64 a, u64 b, u64 c) {
  if (a == 0 || b == 0 || c == 0) throw DomainError("triple entries must be positive");
  if (!satisfies_pythagoras(a, b, c)) throw DomainError("a^2 + b^2 != c^2");
  return {a, b, c};
}

u64 gcd3(u64 x, u64 y, u64 z) { return std::gcd(std::gcd(x, y), z); }

std::optional<TripleClass> classify(u64 x, u64 y, u64 z) {
  std::array<u64, 3> v{x, y, z};
  std::sort(v.begin(), v.end());
  if (v[0] == 0) return std::nullopt;
  if (!satisfies_pythagoras(v[0], v[1], v[2])) return std::nullopt;
  TripleClass cls;
  cls.gcd = gcd3(v[0], v[1], v[2]);
  cls.primitive = cls.gcd == 1;
  cls.d = v[2] - v[1];
  cls.d_prime = v[2] - v[0];
  return cls;
}

std::optional<TripleClass> classify(const Triple& t) { return classify(t.a, t.b, t.c); }

Triple canonicalize(const Triple& t) {
  return t.a <= t.b ? t : Triple{t.b, t.a, t.c};
}

std::vector<Triple> oracle_enumerate(u64 max_leg) {
  if (max_leg < 3) throw DomainError("oracle bound must be at least 3");
  // Largest candidate sum is 2 (max_leg - 1)^2.
  checked::mul(2, checked::square(max_leg));
  std::vector<Triple> out;
  for (u64 a = 1; a < max_leg; ++a) {
    const u64 a2 = a * a;
    for (u64 b = a + 1; b < max_leg; ++b) {
      const u64 s = a2 + b * b;
      const u64 c = isqrt(s);
      if (c * c == s) out.push_back({a, b, c});
    }
  }
  return out;
}

std::vector<Triple> oracle_by_hypotenuse(u64 max_c) {
  if (max_c < 1) throw DomainError("oracle bound must be positive");
  checked::mul(2, checked::square(max_c));
  std::vector<Triple> out;
  for (u64 c = 1; c < max_c; ++c) {
    const u64 c2 = c * c;
    u64 a = 1;
    u64 b = c - 1;
    u64 s = 1 + b * b;
    while (a < b) {
      if (s == c2) out.push_back({a, b, c});
      if (s <= c2) {
        s += 2 * a + 1;
        ++a;
      } else {
        s -= 2 * b - 1;
        --b;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Triple> first_ppts(std::size_t count) {
  if (count == 0) throw DomainError("count must be at least 1");
  std::vector<Triple> out;
  std::vector<Triple> row;
  for (u64 a = 3; out.size() < count; ++a) {
    const u64 a2 = checked::square(a);
    row.clear();
    // a^2 = (c - b)(c + b) with c - b < a; walking u upward gives b descending.
    for (u64 u = 1; u < a; ++u) {
      if (a2 % u != 0) continue;
      const u64 v = a2 / u;
      if ((u ^ v) & 1) continue;
      const Triple t{a, (v - u) / 2, (u + v) / 2};
      if (t.b > a && is_primitive(t)) row.push_back(t);
    }
    for (auto it = row.rbegin(); it != row.rend() && out.size() < count; ++it) out.push_back(*it);
  }
  return out;
}

}  // namespace pytrip
