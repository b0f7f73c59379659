#include "pytrip/difference.hpp"

#include <algorithm>

namespace pytrip {

std::optional<DiffSpec> make_diff_spec(u64 a, u64 d) {
  if (d == 0 || a <= d) return std::nullopt;
  const u64 diff = checked::square(a) - d * d;
  if (diff % checked::mul(2, d) != 0) return std::nullopt;
  return DiffSpec{a, d};
}

std::optional<Triple> triple_with_diff(u64 a, u64 d) {
  if (d == 0 || a <= d) throw DomainError("difference family needs a > d >= 1");
  const auto spec = make_diff_spec(a, d);
  if (!spec) return std::nullopt;
  return triple_with_diff(*spec);
}

Triple triple_with_diff(const DiffSpec& spec) {
  const CheckedInt a2 = squared(spec.a);
  const CheckedInt d2 = squared(spec.d);
  const CheckedInt two_d = CheckedInt{2} * spec.d;
  return {spec.a, ((a2 - d2) / two_d).value(), ((a2 + d2) / two_d).value()};
}

const char* to_string(DiffKind kind) {
  switch (kind) {
    case DiffKind::ppt:
      return "PPT";
    case DiffKind::pt_only:
      return "PT";
    case DiffKind::invalid:
      break;
  }
  return "invalid";
}

DiffClass diff_family_class(u64 a, u64 d) {
  if (d == 0 || a <= d) return {DiffKind::invalid, "requires a > d >= 1"};
  const auto spec = make_diff_spec(a, d);
  if (!spec) return {DiffKind::invalid, "2d does not divide a^2 - d^2"};
  switch (d) {
    case 1:
      return {DiffKind::ppt, "d = 1: every odd a gives a PPT"};
    case 2:
      if (a % 4 == 0) return {DiffKind::ppt, "d = 2, a = 0 (mod 4)"};
      return {DiffKind::pt_only, "d = 2, a = 2 (mod 4)"};
    case 3:
      return {DiffKind::pt_only, "d = 3: three times a d = 1 triple"};
    case 8:
      if (a % 8 == 4) return {DiffKind::ppt, "d = 8, a = 4 (mod 8)"};
      return {DiffKind::pt_only, "d = 8, a = 0 (mod 8)"};
    case 9:
      if (a % 9 == 0) return {DiffKind::pt_only, "d = 9, a = 0 (mod 9)"};
      return {DiffKind::ppt, a % 9 == 3 ? "d = 9, a = 3 (mod 9)" : "d = 9, a = 6 (mod 9)"};
    default:
      break;
  }
  const Triple t = triple_with_diff(*spec);
  if (is_primitive(t)) return {DiffKind::ppt, "gcd 1"};
  return {DiffKind::pt_only, "gcd " + std::to_string(gcd3(t.a, t.b, t.c))};
}

std::vector<u64> allowable_diffs(u64 limit) {
  std::vector<u64> out;
  for (u64 n = 1; checked::square(n) <= limit; n += 2) out.push_back(n * n);
  for (u64 m = 1; checked::mul(2, checked::square(m)) <= limit; ++m) out.push_back(2 * m * m);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_allowable(u64 d) {
  if (d == 0) return false;
  if (d % 2 == 1) return exact_sqrt(d).has_value();
  return exact_sqrt(d / 2).has_value();
}

}  // namespace pytrip
