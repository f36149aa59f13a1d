#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "partheap/cost_meter.hpp"
#include "partheap/key.hpp"
#include "partheap/node.hpp"
#include "partheap/potential_ledger.hpp"

namespace partheap {

std::optional<HeapKind> parse_heap_kind(std::string_view name);

// Operations shared by every heap in the library and by the reference
// oracle. Errors are reported as HeapError.
class AddressableHeap {
 public:
  virtual ~AddressableHeap() = default;

  virtual HeapKind kind() const = 0;
  virtual Handle insert(UserKey k) = 0;
  virtual UserKey delete_min() = 0;
  virtual void decrease_key(Handle h, UserKey k) = 0;
  virtual UserKey find_min() const = 0;
  virtual std::size_t size() const = 0;
  bool empty() const { return size() == 0; }
  virtual UserKey key_of(Handle h) const = 0;

  virtual const CostMeter& meter() const = 0;
  virtual Potential potential() const = 0;
  // Rows are appended while a ledger is attached; pass nullptr to detach.
  virtual void set_ledger(PotentialLedger* ledger) = 0;
  virtual std::string digest() const = 0;
};

}  // namespace partheap
