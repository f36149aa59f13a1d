#include "partheap/selection.hpp"

#include <algorithm>
#include <string>

#include "partheap/errors.hpp"

namespace partheap {
namespace {

void touch(CostMeter* meter, std::size_t n) {
  if (meter) meter->selection_elements += n;
}

void small_sort(Key* a, std::size_t n, CostMeter* meter) {
  touch(meter, n);
  std::sort(a, a + n);
}

// Median of medians on a[0..n); k is 0-based. Permutes the range.
Key mom_select(Key* a, std::size_t n, std::size_t k, CostMeter* meter) {
  for (;;) {
    if (n <= 10) {
      small_sort(a, n, meter);
      return a[k];
    }
    std::size_t groups = 0;
    for (std::size_t g = 0; g < n; g += 5) {
      std::size_t len = std::min<std::size_t>(5, n - g);
      small_sort(a + g, len, meter);
      std::swap(a[groups++], a[g + len / 2]);
    }
    Key pivot = mom_select(a, groups, groups / 2, meter);
    touch(meter, n);
    Key* mid = std::partition(a, a + n, [&](const Key& x) { return x < pivot; });
    auto smaller = static_cast<std::size_t>(mid - a);
    if (k < smaller) {
      n = smaller;
    } else {
      a = mid;
      n -= smaller;
      k -= smaller;
    }
  }
}

Key quick_select(Key* a, std::size_t n, std::size_t k, std::mt19937_64& rng, CostMeter* meter) {
  for (;;) {
    if (n <= 10) {
      small_sort(a, n, meter);
      return a[k];
    }
    Key pivot = a[std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)];
    touch(meter, n);
    Key* mid = std::partition(a, a + n, [&](const Key& x) { return x < pivot; });
    auto smaller = static_cast<std::size_t>(mid - a);
    if (k < smaller) {
      n = smaller;
    } else {
      a = mid;
      n -= smaller;
      k -= smaller;
    }
  }
}

std::vector<Key> gather(const LinkedSet& set, CostMeter* meter) {
  std::vector<Key> keys;
  keys.reserve(set.size());
  for (const Node& n : set) keys.push_back(n.key);
  touch(meter, keys.size());
  return keys;
}

}  // namespace

Key Selector::select(std::vector<Key>& keys, std::size_t rank, CostMeter* meter) {
  if (rank < 1 || rank > keys.size()) {
    throw HeapError(ErrorCode::RankOutOfRange,
                    "rank " + std::to_string(rank) + " outside 1.." + std::to_string(keys.size()));
  }
  if (mode_ == SelectMode::Deterministic) return mom_select(keys.data(), keys.size(), rank - 1, meter);
  return quick_select(keys.data(), keys.size(), rank - 1, rng_, meter);
}

Key Selector::select(const LinkedSet& set, std::size_t rank, CostMeter* meter) {
  std::vector<Key> keys = gather(set, meter);
  return select(keys, rank, meter);
}

Key select_rank(const LinkedSet& set, std::size_t rank, CostMeter* meter) {
  Selector s;
  return s.select(set, rank, meter);
}

Key select_rank_randomized(const LinkedSet& set, std::size_t rank, std::uint64_t seed,
                           CostMeter* meter) {
  Selector s(SelectMode::Randomized, seed);
  return s.select(set, rank, meter);
}

Split split_at_pivot(LinkedSet& set, const Key& pivot, CostMeter* meter) {
  Split out;
  out.pivot = pivot;
  Node* n = set.empty() ? nullptr : &*set.begin();
  std::uint64_t cmp = 0;
  while (n) {
    Node* next = n->next;
    ++cmp;
    (n->key < pivot ? out.low : out.high).append(n, meter);
    n = next;
  }
  set = LinkedSet{};
  if (meter) meter->comparisons += cmp;
  return out;
}

Split split_by_rank(LinkedSet& set, std::size_t r, Selector& selector, CostMeter* meter) {
  if (r == 0 || r >= set.size()) {
    throw HeapError(ErrorCode::RankOutOfRange,
                    "split rank " + std::to_string(r) + " needs 0 < r < " + std::to_string(set.size()));
  }
  Key pivot = selector.select(set, r + 1, meter);
  return split_at_pivot(set, pivot, meter);
}

}  // namespace partheap
