#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace iml {

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest_bit(Mask m) { return std::countr_zero(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask low_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline bool test(Mask m, int i) { return (m >> i) & 1U; }

// Visits set bits in increasing order.
template <class F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  for_each_bit(m, [&](int i) { out.push_back(i); });
  return out;
}

inline Mask mask_of(const std::vector<int>& vs) {
  Mask m = 0;
  for (int v : vs) m |= bit(v);
  return m;
}

}  // namespace iml
