#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "partheap/heap.hpp"
#include "partheap/linked_set.hpp"
#include "partheap/pivot_index.hpp"
#include "partheap/selection.hpp"

namespace partheap {

struct LPConfig {
  SelectMode select_mode = SelectMode::Deterministic;
  std::uint64_t seed = 0;
  std::int64_t beta = 4;  // potential weight, instrumentation only
};

// Lazy partition heap. Sets S_1..S_l are unordered and separated by pivots;
// only S_1 is ever partitioned, on delete_min, at the larger median. After
// every deletion adjacent sets are concatenated while |A| + |B| < s_A, where
// s_A counts the elements in front of A.
class LPHeap final : public AddressableHeap {
 public:
  explicit LPHeap(LPConfig config = {});

  static LPHeap build(std::span<const UserKey> items, std::vector<Handle>* handles = nullptr,
                      LPConfig config = {});
  // Test hook: installs the given sets verbatim, pivot of each set after the
  // first = its minimum. Keys must already respect the set order.
  static LPHeap from_sets(const std::vector<std::vector<UserKey>>& sets,
                          std::vector<std::vector<Handle>>* handles = nullptr, LPConfig config = {});

  HeapKind kind() const override { return HeapKind::LP; }
  Handle insert(UserKey k) override;
  UserKey delete_min() override;
  void decrease_key(Handle h, UserKey k) override;
  UserKey find_min() const override;
  std::size_t size() const override { return n_; }
  UserKey key_of(Handle h) const override { return pool_.resolve(h)->key.user; }

  void erase(Handle h);
  void increase_key(Handle h, UserKey k);
  void forget_pivots();

  std::int64_t potential_phi() const;
  Potential potential() const override { return {{potential_phi(), 0, 0}}; }
  const CostMeter& meter() const override { return meter_; }
  void set_ledger(PotentialLedger* ledger) override { ledger_ = ledger; }
  std::string digest() const override;

  // Read-only structure for audits.
  std::size_t set_count() const { return sets_.size(); }
  const LinkedSet& set(std::size_t i) const { return sets_[i]; }
  const std::vector<Key>& pivots() const { return index_.pivots(); }  // p_2..p_l
  const Node* cached_min() const { return cached_min_; }
  // True when the most recent mutating operation ended with forget_pivots.
  bool compacted() const { return compacted_; }
  std::int64_t beta() const { return config_.beta; }

  LinkedSet& mutable_set_for_testing(std::size_t i) { return sets_[i]; }

 private:
  Node* locate_and_unlink(Node* node);
  void place(Node* node);
  void refresh_cached_min();
  Snapshot snapshot() const { return ledger_ ? Snapshot{potential(), meter_} : Snapshot{}; }
  void record(LedgerOp op, const Snapshot& before, std::int64_t aux = 0, std::int64_t size1 = 0);

  LPConfig config_;
  NodePool pool_;
  std::vector<LinkedSet> sets_;
  PivotIndex index_;
  std::size_t n_ = 0;
  Node* cached_min_ = nullptr;
  std::uint64_t next_seq_ = 1;
  bool compacted_ = true;
  Selector selector_;
  CostMeter meter_;
  PotentialLedger* ledger_ = nullptr;
};

}  // namespace partheap
