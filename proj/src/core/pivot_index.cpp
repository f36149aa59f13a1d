#include "partheap/pivot_index.hpp"

namespace partheap {

std::size_t pivot_search(std::span<const Key> pivots, const Key& k, CostMeter* meter) {
  std::size_t lo = 0;
  std::size_t len = pivots.size();
  std::uint64_t cmp = 0;
  while (len > 0) {
    std::size_t half = len / 2;
    ++cmp;
    if (pivots[lo + half] <= k) {
      lo += half + 1;
      len -= half + 1;
    } else {
      len = half;
    }
  }
  if (meter) {
    meter->comparisons += cmp;
    meter->pivot_comparisons += cmp;
  }
  return lo;
}

}  // namespace partheap
