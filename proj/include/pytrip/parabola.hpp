#pragma once

#include <cstdint>
#include <ostream>
#include <utility>

#include "pytrip/triple.hpp"

namespace pytrip {

/// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  [[nodiscard]] std::int64_t num() const { return num_; }
  [[nodiscard]] std::int64_t den() const { return den_; }
  [[nodiscard]] bool is_integer() const { return den_ == 1; }
  [[nodiscard]] double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

enum class Orientation { opens_up, opens_right };

/// y = (x^2 - d^2)/(2d) (opens_up) or its mirror x = (y^2 - d^2)/(2d).
struct ParabolaFamily {
  u64 d = 1;
  Orientation orientation = Orientation::opens_up;
};

/// (x^2 - d^2) / (2d), exactly.
Rational parabola_eval(u64 d, std::int64_t x);

/// 2d * b == a^2 - d^2, evaluated without division.
bool point_on_parabola(u64 a, u64 b, u64 d);

/// Membership for either orientation; opens_right swaps the roles of x and y.
bool point_on_parabola(u64 x, u64 y, const ParabolaFamily& family);

/// (c - b, c - a) of a primitive triple after canonicalisation.
/// Throws DomainError for non-primitive input.
std::pair<u64, u64> d_pair(const Triple& t);

struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct VertexFocus {
  RationalPoint vertex;
  RationalPoint focus;
  Rational focal_length;
};

/// Opens-up curve: vertex (0, -d/2), focus at the origin, focal length d/2.
VertexFocus vertex_and_focus(u64 d);

}  // namespace pytrip
