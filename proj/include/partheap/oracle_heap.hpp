#pragma once

#include <set>
#include <vector>

#include "partheap/heap.hpp"

namespace partheap {

// Reference heap: an ordered set of keys plus a handle table. Handles are
// insertion ordinals, so the oracle accepts exactly the same handle values a
// trace uses.
class OracleHeap final : public AddressableHeap {
 public:
  HeapKind kind() const override { return HeapKind::Oracle; }
  Handle insert(UserKey k) override;
  UserKey delete_min() override;
  void decrease_key(Handle h, UserKey k) override;
  UserKey find_min() const override;
  std::size_t size() const override { return keys_.size(); }
  UserKey key_of(Handle h) const override;

  const CostMeter& meter() const override { return meter_; }
  Potential potential() const override { return {}; }
  void set_ledger(PotentialLedger*) override {}
  std::string digest() const override;

  // Keys in ascending order.
  std::vector<UserKey> sorted_keys() const;

 private:
  const Key& live_key(Handle h) const;

  std::set<Key> keys_;
  std::vector<Key> by_handle_;
  std::vector<bool> alive_;
  CostMeter meter_;
};

}  // namespace partheap
