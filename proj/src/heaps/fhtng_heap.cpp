#include "partheap/fhtng_heap.hpp"

#include <algorithm>
#include <sstream>

#include "partheap/errors.hpp"
#include "partheap/pivot_index.hpp"

namespace partheap {
namespace {

constexpr std::size_t kFibCount = 93;

constexpr std::array<std::int64_t, kFibCount> make_fib() {
  std::array<std::int64_t, kFibCount> f{};
  f[1] = 1;
  for (std::size_t i = 2; i < kFibCount; ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}

constexpr auto kFib = make_fib();

}  // namespace

std::int64_t fib(std::int64_t i) {
  if (i <= 0) return 0;
  if (i >= static_cast<std::int64_t>(kFibCount)) {
    throw HeapError(ErrorCode::Precondition, "Fibonacci index " + std::to_string(i) + " overflows");
  }
  return kFib[static_cast<std::size_t>(i)];
}

FHTNGHeap FHTNGHeap::from_slots(const std::map<std::size_t, std::vector<UserKey>>& slots,
                                std::map<std::size_t, std::vector<Handle>>* handles) {
  FHTNGHeap h;
  for (const auto& [i, keys] : slots) {
    h.require(i >= kFirstSlot, "slot index below 3");
    h.ensure(i);
    for (UserKey k : keys) {
      Node* node = h.pool_.acquire({k, h.next_seq_++});
      h.slots_[i].set.append(node);
      if (handles) (*handles)[i].push_back(NodePool::handle_of(node));
    }
    if (!keys.empty()) h.slots_[i].pivot = h.slots_[i].set.min_node()->key;
    h.n_ += keys.size();
  }
  return h;
}

Handle FHTNGHeap::insert(UserKey k) {
  const Snapshot before = snapshot();
  Node* node = pool_.acquire({k, next_seq_++});
  const std::size_t i = locate(node->key);
  const bool was_empty = !present(i);
  put(i, node);
  ++n_;
  record(LedgerOp::Insert, before, static_cast<std::int64_t>(i));
  if (was_empty || static_cast<std::int64_t>(slots_[i].set.size()) >= fib(i + 3)) restore();
  return NodePool::handle_of(node);
}

UserKey FHTNGHeap::delete_min() {
  if (n_ == 0) throw HeapError(ErrorCode::EmptyHeap, "delete_min on an empty heap");
  const Snapshot before = snapshot();
  const std::int64_t occupied = ledger_ ? count_present() : 0;
  const std::size_t j = first_present();
  LinkedSet& s = slots_[j].set;
  Node* min = s.min_node(&meter_);
  s.remove(min, &meter_);
  const UserKey out = min->key.user;
  pool_.release(min);
  --n_;
  const bool emptied = s.empty();
  if (emptied) index_dirty_ = true;
  record(LedgerOp::DeleteMin, before, static_cast<std::int64_t>(j), occupied);
  if (emptied || (j > kFirstSlot && static_cast<std::int64_t>(s.size()) <= fib(j))) restore();
  return out;
}

void FHTNGHeap::decrease_key(Handle h, UserKey k) {
  Node* node = pool_.resolve(h);
  if (k > node->key.user) throw HeapError(ErrorCode::KeyIncrease, "decrease_key would increase the key");
  const Snapshot before = snapshot();
  const std::size_t src = locate(node->key);
  slots_[src].set.remove(node, &meter_);
  bool structural = false;
  if (slots_[src].set.empty()) {
    index_dirty_ = true;
    structural = true;
  }
  node->key.user = k;
  const std::size_t dst = locate(node->key);
  if (!present(dst)) structural = true;
  put(dst, node);
  record(LedgerOp::DecreaseKey, before, static_cast<std::int64_t>(src), static_cast<std::int64_t>(dst));
  const bool underfull = src > kFirstSlot && present(src) &&
                         static_cast<std::int64_t>(slots_[src].set.size()) <= fib(src);
  const bool full = static_cast<std::int64_t>(slots_[dst].set.size()) >= fib(dst + 3);
  if (structural || underfull || full) restore();
}

UserKey FHTNGHeap::find_min() const {
  if (n_ == 0) throw HeapError(ErrorCode::EmptyHeap, "find_min on an empty heap");
  return slots_[first_present()].set.min_node()->key.user;
}

void FHTNGHeap::overflow_down(std::size_t i) {
  require(present(i) && static_cast<std::int64_t>(slots_[i].set.size()) >= fib(i + 3) && !present(i + 1),
          "overflow_down needs a full S_i above an empty S_{i+1}");
  const Snapshot before = snapshot();
  ensure(i + 1);
  slots_[i + 1].set = std::move(slots_[i].set);
  slots_[i + 1].pivot = slots_[i].pivot;
  meter_.list_links += 2;
  index_dirty_ = true;
  record(LedgerOp::OverflowDown, before, static_cast<std::int64_t>(i));
}

void FHTNGHeap::overflow_thru(std::size_t i) {
  require(present(i) && static_cast<std::int64_t>(slots_[i].set.size()) >= fib(i + 3) && present(i + 1) &&
              !present(i + 2),
          "overflow_thru needs full S_i, occupied S_{i+1}, empty S_{i+2}");
  const Snapshot before = snapshot();
  ensure(i + 2);
  LinkedSet merged = std::move(slots_[i].set);
  merged.concat(slots_[i + 1].set, &meter_);
  const auto moved = static_cast<std::size_t>(fib(i + 3));
  Split parts = split_by_rank(merged, merged.size() - moved, selector_, &meter_);
  slots_[i + 1].set = std::move(parts.low);
  slots_[i + 1].pivot = slots_[i + 1].set.min_node(&meter_)->key;
  slots_[i + 2].set = std::move(parts.high);
  slots_[i + 2].pivot = parts.pivot;
  index_dirty_ = true;
  record(LedgerOp::OverflowThru, before, static_cast<std::int64_t>(i));
}

void FHTNGHeap::underflow_up(std::size_t i) {
  require(i > kFirstSlot && present(i) && static_cast<std::int64_t>(slots_[i].set.size()) <= fib(i) &&
              !present(i - 1),
          "underflow_up needs an underfull S_i below an empty S_{i-1}");
  const Snapshot before = snapshot();
  slots_[i - 1].set = std::move(slots_[i].set);
  slots_[i - 1].pivot = slots_[i].pivot;
  meter_.list_links += 2;
  index_dirty_ = true;
  record(LedgerOp::UnderflowUp, before, static_cast<std::int64_t>(i));
}

void FHTNGHeap::underflow_thru(std::size_t i) {
  require(i >= kFirstSlot + 2 && present(i) && static_cast<std::int64_t>(slots_[i].set.size()) <= fib(i) &&
              present(i - 1) && !present(i - 2),
          "underflow_thru needs underfull S_i, occupied S_{i-1}, empty S_{i-2}");
  const Snapshot before = snapshot();
  const std::size_t moved = slots_[i].set.size();
  LinkedSet merged = std::move(slots_[i - 1].set);
  merged.concat(slots_[i].set, &meter_);
  Split parts = split_by_rank(merged, moved, selector_, &meter_);
  slots_[i - 2].set = std::move(parts.low);
  slots_[i - 2].pivot = slots_[i - 2].set.min_node(&meter_)->key;
  slots_[i - 1].set = std::move(parts.high);
  slots_[i - 1].pivot = parts.pivot;
  index_dirty_ = true;
  record(LedgerOp::UnderflowThru, before, static_cast<std::int64_t>(i));
}

void FHTNGHeap::underflow_absorb(std::size_t i) {
  require(i == kFirstSlot + 1 && present(i) && static_cast<std::int64_t>(slots_[i].set.size()) <= fib(i) &&
              present(kFirstSlot),
          "underflow_absorb applies to an underfull S_4 with S_3 occupied");
  const Snapshot before = snapshot();
  slots_[kFirstSlot].set.concat(slots_[i].set, &meter_);
  index_dirty_ = true;
  record(LedgerOp::UnderflowAbsorb, before, static_cast<std::int64_t>(i));
}

void FHTNGHeap::merge_down(std::size_t i) {
  require(i >= kFirstSlot + 2 && present(i - 2) && present(i - 1) && present(i) && !present(i + 1),
          "merge_down needs S_{i-2}, S_{i-1}, S_i occupied and S_{i+1} empty");
  const Snapshot before = snapshot();
  ensure(i + 1);
  slots_[i + 1].set = std::move(slots_[i - 1].set);
  slots_[i + 1].set.concat(slots_[i].set, &meter_);
  slots_[i + 1].pivot = slots_[i - 1].pivot;
  index_dirty_ = true;
  record(LedgerOp::MergeDown, before, static_cast<std::int64_t>(i));
}

void FHTNGHeap::split_up(std::size_t i) {
  bool gap = i >= 11 && present(i);
  for (std::size_t t = i - 9; gap && t < i; ++t) gap = !present(t);
  require(gap, "split_up needs an occupied S_i with S_{i-9}..S_{i-1} empty");
  const Snapshot before = snapshot();
  const auto size = static_cast<std::int64_t>(slots_[i].set.size());
  const auto ii = static_cast<std::int64_t>(i);
  std::int64_t j = 0;
  while (j < 3 && !(fib(ii + j) <= size && size <= fib(ii + j + 1))) ++j;
  require(j < 3, "split_up on a set outside its size band");
  const std::int64_t r = size - fib(ii + j);
  const std::int64_t b = fib(ii + j - 1) + std::min(r, fib(ii + j - 2));
  const std::int64_t a = size - b;
  Split parts = split_by_rank(slots_[i].set, static_cast<std::size_t>(a), selector_, &meter_);
  slots_[i - 2].set = std::move(parts.low);
  slots_[i - 2].pivot = slots_[i - 2].set.min_node(&meter_)->key;
  slots_[i - 1].set = std::move(parts.high);
  slots_[i - 1].pivot = parts.pivot;
  index_dirty_ = true;
  record(LedgerOp::SplitUp, before, ii);
}

void FHTNGHeap::restore() {
  const std::size_t cap = 4 * std::max<std::size_t>(slots_.size(), 16);
  for (std::size_t iter = 0;; ++iter) {
    require(iter <= cap, "restore did not converge");
    bool acted = false;
    std::size_t prev = 1;  // virtual occupied slot in front of S_3
    for (std::size_t i = kFirstSlot; i < slots_.size() && !acted; ++i) {
      if (!present(i)) continue;
      const auto sz = static_cast<std::int64_t>(slots_[i].set.size());
      if (sz >= fib(i + 3)) {
        if (!present(i + 1)) {
          overflow_down(i);
          acted = true;
        } else if (!present(i + 2)) {
          overflow_thru(i);
          acted = true;
        }
      } else if (i > kFirstSlot && sz <= fib(i)) {
        if (!present(i - 1)) {
          underflow_up(i);
          acted = true;
        } else if (i - 1 == kFirstSlot) {
          underflow_absorb(i);
          acted = true;
        } else if (!present(i - 2)) {
          underflow_thru(i);
          acted = true;
        }
      }
      if (acted) break;
      if (!present(i - 1)) {
        std::size_t end = i;
        while (present(end + 1)) ++end;
        if (end - i >= 2) {
          merge_down(end);
          acted = true;
          break;
        }
      }
      if (i - prev > 9) {
        split_up(i);
        acted = true;
        break;
      }
      prev = i;
    }
    if (!acted) {
      trim();
      return;
    }
  }
}

std::int64_t FHTNGHeap::size_potential(std::size_t i, std::int64_t s) {
  const auto ii = static_cast<std::int64_t>(i);
  // Below F_i only happens in S_3, which has no lower bound; it carries no
  // size potential there.
  if (s == 0 || s < fib(ii)) return 0;
  if (s < fib(ii + 1)) return fib(ii + 1) - s;
  if (s <= fib(ii + 2)) return 0;
  return s - fib(ii + 2);
}

std::int64_t FHTNGHeap::phi_nonempty() const { return count_present(); }

std::int64_t FHTNGHeap::phi_size() const {
  std::int64_t total = 0;
  for (std::size_t i = kFirstSlot; i < slots_.size(); ++i) {
    total += size_potential(i, static_cast<std::int64_t>(slots_[i].set.size()));
  }
  return total;
}

std::int64_t FHTNGHeap::phi_up() const {
  std::int64_t total = 0;
  std::int64_t above = 0;
  for (std::size_t i = kFirstSlot; i < slots_.size(); ++i) {
    if (!present(i)) continue;
    total += std::max<std::int64_t>(0, fib(static_cast<std::int64_t>(i) - 3) - above);
    above += static_cast<std::int64_t>(slots_[i].set.size());
  }
  return total;
}

std::string FHTNGHeap::digest() const {
  std::ostringstream os;
  os << "fhtng n=" << n_ << " slots=[";
  bool first = true;
  for (std::size_t i = kFirstSlot; i < slots_.size(); ++i) {
    if (!present(i)) continue;
    os << (first ? "" : ",") << i << ':' << slots_[i].set.size() << '@' << slots_[i].pivot;
    first = false;
  }
  os << ']';
  return os.str();
}

std::size_t FHTNGHeap::first_present() const {
  for (std::size_t i = kFirstSlot; i < slots_.size(); ++i) {
    if (present(i)) return i;
  }
  return slots_.size();
}

void FHTNGHeap::ensure(std::size_t i) {
  if (slots_.size() <= i) slots_.resize(i + 1);
}

void FHTNGHeap::trim() {
  while (slots_.size() > kFirstSlot + 1 && slots_.back().set.empty()) slots_.pop_back();
}

std::size_t FHTNGHeap::locate(const Key& k) {
  if (index_dirty_) {
    index_slots_.clear();
    index_pivots_.clear();
    for (std::size_t i = kFirstSlot; i < slots_.size(); ++i) {
      if (!present(i)) continue;
      index_slots_.push_back(i);
      index_pivots_.push_back(slots_[i].pivot);
    }
    index_dirty_ = false;
  }
  const std::size_t pos = pivot_search(index_pivots_, k, &meter_);
  return pos == 0 ? kFirstSlot : index_slots_[pos - 1];
}

void FHTNGHeap::put(std::size_t i, Node* node) {
  ensure(i);
  Slot& s = slots_[i];
  // Only S_3 can receive a key below its pivot: it is where keys smaller
  // than every pivot go.
  if (s.set.empty() || node->key < s.pivot) {
    s.pivot = node->key;
    index_dirty_ = true;
  }
  s.set.append(node, &meter_);
}

void FHTNGHeap::require(bool ok, const char* what) const {
  if (!ok) throw HeapError(ErrorCode::Precondition, std::string(what) + " (" + digest() + ")");
}

std::int64_t FHTNGHeap::count_present() const {
  std::int64_t c = 0;
  for (std::size_t i = kFirstSlot; i < slots_.size(); ++i) c += present(i);
  return c;
}

void FHTNGHeap::record(LedgerOp op, const Snapshot& before, std::int64_t index, std::int64_t aux) {
  if (!ledger_) return;
  LedgerRow row;
  row.heap = HeapKind::FHTNG;
  row.op = op;
  row.index = index;
  row.aux = aux;
  row.before = before.phi;
  const CostMeter spent = meter_ - before.meter;
  row.actual = spent.touches() + spent.list_links;
  row.after = potential();
  ledger_->record(row);
}

}  // namespace partheap
