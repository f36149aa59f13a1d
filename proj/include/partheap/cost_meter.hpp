#pragma once

#include <cstdint>

namespace partheap {

// Work counters. Every heap owns one; callers snapshot it around an operation
// and subtract to obtain per-operation costs.
struct CostMeter {
  std::uint64_t comparisons = 0;         // key comparisons outside selection
  std::uint64_t pivot_comparisons = 0;   // subset of comparisons spent in pivot search
  std::uint64_t node_moves = 0;          // nodes appended to a set
  std::uint64_t list_links = 0;          // prev/next pointer writes
  std::uint64_t selection_elements = 0;  // elements touched inside select_rank

  // Elements touched in any way: compared, moved or examined by selection.
  std::uint64_t touches() const { return comparisons + node_moves + selection_elements; }

  CostMeter operator-(const CostMeter& o) const {
    return {comparisons - o.comparisons, pivot_comparisons - o.pivot_comparisons,
            node_moves - o.node_moves, list_links - o.list_links,
            selection_elements - o.selection_elements};
  }
};

}  // namespace partheap
