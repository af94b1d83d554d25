#pragma once

#include <cstdint>

namespace checkerboard::detail {

// Calls f(mask) for every n-bit mask with exactly k bits set, in increasing
// order (Gosper's hack). n <= 31.
template <class F>
void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(std::uint32_t{0});
    return;
  }
  const std::uint32_t limit = std::uint32_t{1} << n;
  std::uint32_t mask = (std::uint32_t{1} << k) - 1;
  while (mask < limit) {
    f(mask);
    const std::uint32_t low = mask & (~mask + 1);
    const std::uint32_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
  }
}

}  // namespace checkerboard::detail
