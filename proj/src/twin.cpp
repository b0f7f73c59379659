#include "pytrip/twin.hpp"

namespace pytrip {

void TwinWindow::advance() {
  const EuclidPair pair = next_pair(prev_pair, curr_pair);
  const Triple next = next_twin(prev.a, curr.a, prev.c, curr.c);
  prev = curr;
  curr = next;
  prev_pair = curr_pair;
  curr_pair = pair;
}

std::optional<Triple> twin_from_c(u64 c) {
  if (c < 5 || c % 2 == 0) return std::nullopt;
  const u64 disc = checked::mul(2, checked::square(c)) - 1;
  const auto root = exact_sqrt(disc);
  if (!root) return std::nullopt;
  // disc is odd, so its root is odd as well.
  const u64 a = (*root - 1) / 2;
  return Triple{a, a + 1, c};
}

EuclidPair next_pair(EuclidPair prev, EuclidPair curr) {
  return {checked::add(checked::mul(2, curr.h), prev.h), checked::add(checked::mul(2, curr.k), prev.k)};
}

Triple next_twin(u64 prev_a, u64 curr_a, u64 prev_c, u64 curr_c) {
  const u64 a = (CheckedInt{6} * curr_a - prev_a + 2).value();
  const u64 c = (CheckedInt{6} * curr_c - prev_c).value();
  const u64 b = checked::add(a, 1);
  if (!satisfies_pythagoras(a, b, c)) throw DomainError("inputs are not consecutive twin triples");
  return {a, b, c};
}

std::vector<Triple> twin_sequence(std::size_t count) {
  if (count == 0) throw DomainError("count must be at least 1");
  std::vector<Triple> out;
  TwinWindow w;
  out.push_back(w.prev);
  if (count > 1) out.push_back(w.curr);
  while (out.size() < count) {
    out.push_back(next_twin(w.prev.a, w.curr.a, w.prev.c, w.curr.c));
    w.prev = w.curr;
    w.curr = out.back();
  }
  return out;
}

}  // namespace pytrip
