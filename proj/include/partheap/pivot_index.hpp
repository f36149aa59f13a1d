#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "partheap/cost_meter.hpp"
#include "partheap/key.hpp"

namespace partheap {

// Number of pivots <= k in a non-decreasing pivot sequence, which is the
// 0-based index of the set whose range holds k when the pivots are p_2..p_l.
// Binary search; comparisons are charged to both comparison counters.
std::size_t pivot_search(std::span<const Key> pivots, const Key& k, CostMeter* meter = nullptr);

// Sorted pivot array for structures whose sets are addressed by position.
class PivotIndex {
 public:
  std::size_t search(const Key& k, CostMeter* meter = nullptr) const {
    return pivot_search(pivots_, k, meter);
  }
  std::vector<Key>& pivots() { return pivots_; }
  const std::vector<Key>& pivots() const { return pivots_; }
  std::size_t size() const { return pivots_.size(); }

 private:
  std::vector<Key> pivots_;
};

}  // namespace partheap
