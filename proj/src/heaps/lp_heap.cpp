#include "partheap/lp_heap.hpp"

#include <algorithm>
#include <sstream>

#include "partheap/errors.hpp"

namespace partheap {

LPHeap::LPHeap(LPConfig config) : config_(config), selector_(config.select_mode, config.seed) {
  sets_.emplace_back();
}

LPHeap LPHeap::build(std::span<const UserKey> items, std::vector<Handle>* handles, LPConfig config) {
  LPHeap h(config);
  for (UserKey k : items) {
    Node* node = h.pool_.acquire({k, h.next_seq_++});
    h.sets_[0].append(node, &h.meter_);
    if (handles) handles->push_back(NodePool::handle_of(node));
  }
  h.n_ = items.size();
  h.compacted_ = false;
  h.refresh_cached_min();
  return h;
}

LPHeap LPHeap::from_sets(const std::vector<std::vector<UserKey>>& sets,
                         std::vector<std::vector<Handle>>* handles, LPConfig config) {
  LPHeap h(config);
  h.sets_.clear();
  for (const auto& keys : sets) {
    LinkedSet s;
    std::vector<Handle> hs;
    for (UserKey k : keys) {
      Node* node = h.pool_.acquire({k, h.next_seq_++});
      s.append(node);
      hs.push_back(NodePool::handle_of(node));
    }
    if (!h.sets_.empty()) {
      h.index_.pivots().push_back(s.empty() ? h.index_.pivots().empty() ? Key::lowest()
                                                                          : h.index_.pivots().back()
                                            : s.min_node()->key);
    }
    h.n_ += s.size();
    h.sets_.push_back(std::move(s));
    if (handles) handles->push_back(std::move(hs));
  }
  if (h.sets_.empty()) h.sets_.emplace_back();
  h.compacted_ = false;
  h.refresh_cached_min();
  return h;
}

Handle LPHeap::insert(UserKey k) {
  const Snapshot before = snapshot();
  Node* node = pool_.acquire({k, next_seq_++});
  place(node);
  ++n_;
  ++meter_.comparisons;
  if (!cached_min_ || node->key < cached_min_->key) cached_min_ = node;
  compacted_ = false;
  record(LedgerOp::Insert, before);
  return NodePool::handle_of(node);
}

UserKey LPHeap::delete_min() {
  if (n_ == 0) throw HeapError(ErrorCode::EmptyHeap, "delete_min on an empty heap");
  if (sets_.front().empty()) forget_pivots();
  const Snapshot before = snapshot();
  const auto l_before = static_cast<std::int64_t>(sets_.size());
  const auto size1 = static_cast<std::int64_t>(sets_.front().size());

  LinkedSet& s1 = sets_.front();
  Node* min = s1.min_node(&meter_);
  s1.remove(min, &meter_);
  const UserKey out = min->key.user;
  pool_.release(min);
  cached_min_ = nullptr;
  --n_;

  const std::size_t m = s1.size();
  if (m >= 2) {
    Split parts;
    if (selector_.mode() == SelectMode::Deterministic) {
      parts = split_by_rank(s1, (m + 1) / 2, selector_, &meter_);
    } else {
      // One partition round around a uniformly chosen element; redraw when
      // the draw is the minimum, which would leave the low side empty.
      std::uniform_int_distribution<std::size_t> pick(0, m - 1);
      for (;;) {
        std::size_t steps = pick(selector_.rng());
        auto it = s1.begin();
        for (std::size_t i = 0; i < steps; ++i) ++it;
        meter_.selection_elements += steps + 1;
        const Key pivot = it->key;
        std::uint64_t below = 0;
        for (const Node& n : s1) below += n.key < pivot;
        meter_.selection_elements += m;
        if (below > 0) {
          parts = split_at_pivot(s1, pivot, &meter_);
          break;
        }
      }
    }
    sets_.front() = std::move(parts.low);
    sets_.insert(sets_.begin() + 1, std::move(parts.high));
    index_.pivots().insert(index_.pivots().begin(), parts.pivot);
  }
  forget_pivots();
  refresh_cached_min();
  record(LedgerOp::DeleteMin, before, l_before, size1);
  return out;
}

void LPHeap::decrease_key(Handle h, UserKey k) {
  Node* node = pool_.resolve(h);
  if (k > node->key.user) throw HeapError(ErrorCode::KeyIncrease, "decrease_key would increase the key");
  const Snapshot before = snapshot();
  locate_and_unlink(node);
  node->key.user = k;
  place(node);
  ++meter_.comparisons;
  if (node->key < cached_min_->key) cached_min_ = node;
  compacted_ = false;
  record(LedgerOp::DecreaseKey, before);
}

UserKey LPHeap::find_min() const {
  if (n_ == 0) throw HeapError(ErrorCode::EmptyHeap, "find_min on an empty heap");
  return cached_min_->key.user;
}

void LPHeap::erase(Handle h) {
  Node* node = pool_.resolve(h);
  const Snapshot before = snapshot();
  locate_and_unlink(node);
  const bool was_min = node == cached_min_;
  pool_.release(node);
  --n_;
  forget_pivots();
  if (was_min) refresh_cached_min();
  record(LedgerOp::Delete, before);
}

void LPHeap::increase_key(Handle h, UserKey k) {
  Node* node = pool_.resolve(h);
  if (k < node->key.user) throw HeapError(ErrorCode::KeyDecrease, "increase_key would decrease the key");
  const Snapshot before = snapshot();
  locate_and_unlink(node);
  const bool was_min = node == cached_min_;
  --n_;
  forget_pivots();
  node->key.user = k;
  place(node);
  ++n_;
  if (was_min) refresh_cached_min();
  compacted_ = false;
  record(LedgerOp::IncreaseKey, before);
}

void LPHeap::forget_pivots() {
  std::vector<LinkedSet> out;
  std::vector<Key> out_pivots;
  out.reserve(sets_.size());
  out_pivots.reserve(sets_.size());
  std::int64_t prefix = 0;  // s_A: elements in front of the current set A
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    LinkedSet& b = sets_[i];
    if (b.empty()) continue;
    if (out.empty()) {
      out.push_back(std::move(b));
      continue;
    }
    LinkedSet& a = out.back();
    if (static_cast<std::int64_t>(a.size() + b.size()) < prefix) {
      a.concat(b, &meter_);
    } else {
      prefix += static_cast<std::int64_t>(a.size());
      out.push_back(std::move(b));
      out_pivots.push_back(index_.pivots()[i - 1]);
    }
  }
  if (out.empty()) out.emplace_back();
  sets_ = std::move(out);
  index_.pivots() = std::move(out_pivots);
  compacted_ = true;
}

std::int64_t LPHeap::potential_phi() const {
  std::int64_t phi = 0;
  std::int64_t prefix = 0;
  for (const LinkedSet& s : sets_) {
    const auto sz = static_cast<std::int64_t>(s.size());
    phi += config_.beta * std::max<std::int64_t>(0, sz - prefix);
    prefix += sz;
  }
  return phi;
}

std::string LPHeap::digest() const {
  std::ostringstream os;
  os << "lp n=" << n_ << " l=" << sets_.size() << " sizes=[";
  for (std::size_t i = 0; i < sets_.size() && i < 24; ++i) os << (i ? "," : "") << sets_[i].size();
  if (sets_.size() > 24) os << ",...";
  os << "] pivots=[";
  const auto& p = index_.pivots();
  for (std::size_t i = 0; i < p.size() && i < 24; ++i) os << (i ? "," : "") << p[i];
  if (p.size() > 24) os << ",...";
  os << ']';
  return os.str();
}

Node* LPHeap::locate_and_unlink(Node* node) {
  sets_[index_.search(node->key, &meter_)].remove(node, &meter_);
  return node;
}

void LPHeap::place(Node* node) { sets_[index_.search(node->key, &meter_)].append(node, &meter_); }

void LPHeap::refresh_cached_min() {
  cached_min_ = nullptr;
  for (const LinkedSet& s : sets_) {
    if (!s.empty()) {
      cached_min_ = s.min_node(&meter_);
      return;
    }
  }
}

void LPHeap::record(LedgerOp op, const Snapshot& before, std::int64_t aux, std::int64_t size1) {
  if (!ledger_) return;
  LedgerRow row;
  row.heap = HeapKind::LP;
  row.op = op;
  row.aux = aux;
  row.size1 = size1;
  row.beta = config_.beta;
  row.before = before.phi;
  const CostMeter spent = meter_ - before.meter;
  row.actual = spent.touches() + spent.list_links;
  row.after = potential();
  ledger_->record(row);
}

}  // namespace partheap
