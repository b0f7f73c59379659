#include "pytrip/parabola.hpp"

#include <limits>
#include <numeric>

#include "pytrip/difference.hpp"

namespace pytrip {
namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("rational component exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

i128 gcd128(i128 x, i128 y) {
  if (x < 0) x = -x;
  while (y != 0) {
    const i128 r = x % y;
    x = y;
    y = r;
  }
  return x;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min())
    throw OverflowError("rational component exceeds 64 bits");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

Rational parabola_eval(u64 d, std::int64_t x) {
  if (d == 0) throw DomainError("parabola needs d >= 1");
  if (d > static_cast<u64>(std::numeric_limits<std::int32_t>::max())) throw OverflowError("d too large");
  const i128 id = static_cast<i128>(d);
  const i128 numer = static_cast<i128>(x) * x - id * id;
  const i128 denom = 2 * id;
  const i128 g = gcd128(numer, denom);
  return {narrow(numer / g), narrow(denom / g)};
}

bool point_on_parabola(u64 a, u64 b, u64 d) {
  if (d == 0) throw DomainError("parabola needs d >= 1");
  // 2d*b + d^2 == a^2 keeps everything non-negative.
  return checked::add(checked::mul(checked::mul(2, d), b), checked::square(d)) == checked::square(a);
}

bool point_on_parabola(u64 x, u64 y, const ParabolaFamily& family) {
  return family.orientation == Orientation::opens_up ? point_on_parabola(x, y, family.d)
                                                     : point_on_parabola(y, x, family.d);
}

std::pair<u64, u64> d_pair(const Triple& t) {
  const auto cls = classify(t);
  if (!cls) throw DomainError("not a Pythagorean triple");
  if (!cls->primitive) throw DomainError("d_pair needs a primitive triple");
  const Triple c = canonicalize(t);
  const std::pair<u64, u64> out{c.c - c.b, c.c - c.a};
  if (!is_allowable(out.first) || !is_allowable(out.second))
    throw std::logic_error("primitive triple with a non-allowable difference");
  return out;
}

VertexFocus vertex_and_focus(u64 d) {
  if (d == 0) throw DomainError("parabola needs d >= 1");
  const std::int64_t sd = narrow(static_cast<i128>(d));
  const Rational half_d{sd, 2};
  return {{Rational{0}, Rational{-sd, 2}}, {Rational{0}, Rational{0}}, half_d};
}

}  // namespace pytrip
