#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "partheap/heap.hpp"
#include "partheap/linked_set.hpp"
#include "partheap/selection.hpp"

namespace partheap {

// Sets S_1..S_l with |S_i| < 3 * 2^i. A set that reaches the bound is pushed
// one level down (recursively displacing large sets); an empty S_1 is refilled
// on delete_min by pulling the smallest elements up from the first occupied
// level. Interior sets may be empty.
class ExpHeap final : public AddressableHeap {
 public:
  explicit ExpHeap(SelectMode mode = SelectMode::Deterministic, std::uint64_t seed = 0);

  // Test hook: installs the sets verbatim (index 0 is S_1). A nonempty set's
  // pivot is its minimum, an empty set's pivot equals the next pivot so its
  // range is empty.
  static ExpHeap from_sets(const std::vector<std::vector<UserKey>>& sets,
                           std::vector<std::vector<Handle>>* handles = nullptr);

  HeapKind kind() const override { return HeapKind::Exp; }
  Handle insert(UserKey k) override;
  UserKey delete_min() override;
  void decrease_key(Handle h, UserKey k) override;
  UserKey find_min() const override;
  std::size_t size() const override { return n_; }
  UserKey key_of(Handle h) const override { return pool_.resolve(h)->key.user; }

  // Pushes the full set S_i one level down. Level numbers are 1-based.
  void push(std::size_t i);
  // Refills the empty S_i from the levels below it.
  void pull(std::size_t i);

  Potential potential() const override;
  const CostMeter& meter() const override { return meter_; }
  void set_ledger(PotentialLedger* ledger) override { ledger_ = ledger; }
  std::string digest() const override;

  std::size_t level_count() const { return sets_.size(); }
  const LinkedSet& level(std::size_t i) const { return sets_.at(i - 1); }
  // p_i for 2 <= i <= l.
  const Key& pivot(std::size_t i) const { return pivots_.at(i - 2); }
  const std::vector<Key>& pivots() const { return pivots_; }

  LinkedSet& mutable_level_for_testing(std::size_t i) { return sets_.at(i - 1); }

  static std::int64_t capacity(std::size_t i) { return std::int64_t{3} << i; }

 private:
  std::size_t locate(const Key& k);
  void pull_rec(std::size_t i);
  void require(bool ok, const char* what) const;
  Snapshot snapshot() const { return ledger_ ? Snapshot{potential(), meter_} : Snapshot{}; }
  void record(LedgerOp op, const Snapshot& before, std::int64_t index, std::int64_t aux = 0);

  NodePool pool_;
  std::vector<LinkedSet> sets_;
  std::vector<Key> pivots_;
  std::size_t n_ = 0;
  std::uint64_t next_seq_ = 1;
  Selector selector_;
  CostMeter meter_;
  PotentialLedger* ledger_ = nullptr;
};

}  // namespace partheap
