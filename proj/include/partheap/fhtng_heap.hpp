#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "partheap/heap.hpp"
#include "partheap/linked_set.hpp"
#include "partheap/selection.hpp"

namespace partheap {

// F_0 = 0, F_1 = F_2 = 1. fib(i) is 0 for i <= 0; indices above 92 overflow
// int64 and throw.
std::int64_t fib(std::int64_t i);

class FHTNGHeap final : public AddressableHeap {
 public:
  static constexpr std::size_t kFirstSlot = 3;

  FHTNGHeap() = default;

  // Test hook: slot index -> keys. Each nonempty slot gets its minimum as
  // pivot. No invariant is checked or restored.
  static FHTNGHeap from_slots(const std::map<std::size_t, std::vector<UserKey>>& slots,
                              std::map<std::size_t, std::vector<Handle>>* handles = nullptr);

  HeapKind kind() const override { return HeapKind::FHTNG; }
  Handle insert(UserKey k) override;
  UserKey delete_min() override;
  void decrease_key(Handle h, UserKey k) override;
  UserKey find_min() const override;
  std::size_t size() const override { return n_; }
  UserKey key_of(Handle h) const override { return pool_.resolve(h)->key.user; }

  // Restoring operations. Each throws HeapError(Precondition) when called on
  // a state it does not apply to.
  void overflow_down(std::size_t i);
  void overflow_thru(std::size_t i);
  void underflow_up(std::size_t i);
  void underflow_thru(std::size_t i);
  // Slot 4 underflow while S_3 is occupied: S_4 is concatenated into S_3.
  void underflow_absorb(std::size_t i);
  void merge_down(std::size_t i);
  void split_up(std::size_t i);
  // Runs restoring operations, lowest offending slot first, until both
  // structural invariants and the size bands hold.
  void restore();

  std::int64_t phi_nonempty() const;
  std::int64_t phi_size() const;
  std::int64_t phi_up() const;
  Potential potential() const override { return {{phi_nonempty(), phi_size(), phi_up()}}; }
  static std::int64_t size_potential(std::size_t i, std::int64_t size);

  const CostMeter& meter() const override { return meter_; }
  void set_ledger(PotentialLedger* ledger) override { ledger_ = ledger; }
  std::string digest() const override;

  // One past the highest allocated slot index.
  std::size_t slot_end() const { return slots_.size(); }
  bool present(std::size_t i) const { return i >= kFirstSlot && i < slots_.size() && !slots_[i].set.empty(); }
  std::size_t slot_size(std::size_t i) const { return present(i) ? slots_[i].set.size() : 0; }
  const LinkedSet& slot(std::size_t i) const { return slots_.at(i).set; }
  const Key& pivot(std::size_t i) const { return slots_.at(i).pivot; }
  std::size_t first_present() const;

  LinkedSet& mutable_slot_for_testing(std::size_t i) { return slots_.at(i).set; }

 private:
  struct Slot {
    LinkedSet set;
    Key pivot = Key::lowest();
  };

  void ensure(std::size_t i);
  void trim();
  std::size_t locate(const Key& k);
  void put(std::size_t i, Node* node);
  void require(bool ok, const char* what) const;
  std::int64_t count_present() const;
  Snapshot snapshot() const { return ledger_ ? Snapshot{potential(), meter_} : Snapshot{}; }
  void record(LedgerOp op, const Snapshot& before, std::int64_t index, std::int64_t aux = 0);

  NodePool pool_;
  std::vector<Slot> slots_;
  std::vector<std::size_t> index_slots_;
  std::vector<Key> index_pivots_;
  bool index_dirty_ = true;
  std::size_t n_ = 0;
  std::uint64_t next_seq_ = 1;
  Selector selector_;
  CostMeter meter_;
  PotentialLedger* ledger_ = nullptr;
};

}  // namespace partheap
