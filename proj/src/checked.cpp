#include "pytrip/checked.hpp"

#include <bit>

namespace pytrip {

u64 isqrt(u64 n) {
  if (n < 2) return n;
  // Start above the root; Newton steps then decrease monotonically to the floor.
  const int shift = (std::bit_width(n) + 1) / 2;
  u64 x = u64{1} << shift;
  for (;;) {
    const u64 y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

std::optional<u64> exact_sqrt(u64 n) {
  const u64 r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

}  // namespace pytrip
