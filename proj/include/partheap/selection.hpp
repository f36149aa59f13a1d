#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "partheap/cost_meter.hpp"
#include "partheap/key.hpp"
#include "partheap/linked_set.hpp"

namespace partheap {

enum class SelectMode { Deterministic, Randomized };

// Rank selection over distinct keys. Ranks are 1-based: rank 1 is the minimum.
// Deterministic mode is median-of-medians (groups of five); randomized mode is
// quickselect driven by a seeded generator, so runs are reproducible.
class Selector {
 public:
  explicit Selector(SelectMode mode = SelectMode::Deterministic, std::uint64_t seed = 0)
      : mode_(mode), rng_(seed) {}

  SelectMode mode() const { return mode_; }
  std::mt19937_64& rng() { return rng_; }

  // Permutes `keys`. Throws HeapError(RankOutOfRange) unless 1 <= rank <= size.
  Key select(std::vector<Key>& keys, std::size_t rank, CostMeter* meter = nullptr);
  Key select(const LinkedSet& set, std::size_t rank, CostMeter* meter = nullptr);

 private:
  SelectMode mode_;
  std::mt19937_64 rng_;
};

Key select_rank(const LinkedSet& set, std::size_t rank, CostMeter* meter = nullptr);
Key select_rank_randomized(const LinkedSet& set, std::size_t rank, std::uint64_t seed,
                           CostMeter* meter = nullptr);

struct Split {
  LinkedSet low;   // keys < pivot
  LinkedSet high;  // keys >= pivot
  Key pivot;       // min(high)
};

// Distributes `set` around `pivot`; `set` is left empty.
Split split_at_pivot(LinkedSet& set, const Key& pivot, CostMeter* meter = nullptr);

// Moves the r smallest elements to `low` and the rest to `high`, 0 < r < |set|.
Split split_by_rank(LinkedSet& set, std::size_t r, Selector& selector,
                    CostMeter* meter = nullptr);

}  // namespace partheap
