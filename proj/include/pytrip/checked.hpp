#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace pytrip {

using u64 = std::uint64_t;

/// Raised whenever an exact result does not fit in 64 bits (or would go negative).
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

/// Precondition violations: invalid pairs, wrong parity, non-primitive input, ...
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

namespace checked {

inline u64 add(u64 x, u64 y) {
  u64 r;
  if (__builtin_add_overflow(x, y, &r)) throw OverflowError("addition overflows 64 bits");
  return r;
}

inline u64 sub(u64 x, u64 y) {
  if (y > x) throw OverflowError("subtraction underflows");
  return x - y;
}

inline u64 mul(u64 x, u64 y) {
  u64 r;
  if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("multiplication overflows 64 bits");
  return r;
}

inline u64 square(u64 x) { return mul(x, x); }

}  // namespace checked

/// Non-negative 64-bit integer whose arithmetic throws instead of wrapping.
class CheckedInt {
 public:
  constexpr CheckedInt() = default;
  constexpr CheckedInt(u64 v) : value_(v) {}  // NOLINT: implicit by intent

  [[nodiscard]] constexpr u64 value() const { return value_; }

  friend CheckedInt operator+(CheckedInt x, CheckedInt y) { return checked::add(x.value_, y.value_); }
  friend CheckedInt operator-(CheckedInt x, CheckedInt y) { return checked::sub(x.value_, y.value_); }
  friend CheckedInt operator*(CheckedInt x, CheckedInt y) { return checked::mul(x.value_, y.value_); }
  friend CheckedInt operator/(CheckedInt x, CheckedInt y) {
    if (y.value_ == 0) throw DomainError("division by zero");
    return x.value_ / y.value_;
  }
  friend CheckedInt operator%(CheckedInt x, CheckedInt y) {
    if (y.value_ == 0) throw DomainError("division by zero");
    return x.value_ % y.value_;
  }

  CheckedInt& operator+=(CheckedInt y) { return *this = *this + y; }
  CheckedInt& operator-=(CheckedInt y) { return *this = *this - y; }
  CheckedInt& operator*=(CheckedInt y) { return *this = *this * y; }

  friend constexpr bool operator==(CheckedInt, CheckedInt) = default;
  friend constexpr auto operator<=>(CheckedInt, CheckedInt) = default;

  friend std::ostream& operator<<(std::ostream& os, CheckedInt x) { return os << x.value_; }

 private:
  u64 value_ = 0;
};

inline CheckedInt squared(CheckedInt x) { return x * x; }

/// floor(sqrt(n)), computed by integer Newton iteration.
u64 isqrt(u64 n);

/// The root when n is a perfect square.
std::optional<u64> exact_sqrt(u64 n);

}  // namespace pytrip
