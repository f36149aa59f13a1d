#include "partheap/exp_heap.hpp"

#include <algorithm>
#include <sstream>

#include "partheap/errors.hpp"
#include "partheap/pivot_index.hpp"

namespace partheap {
namespace {

std::int64_t pow2(std::size_t e) { return std::int64_t{1} << e; }

}  // namespace

ExpHeap::ExpHeap(SelectMode mode, std::uint64_t seed) : selector_(mode, seed) { sets_.emplace_back(); }

ExpHeap ExpHeap::from_sets(const std::vector<std::vector<UserKey>>& sets,
                           std::vector<std::vector<Handle>>* handles) {
  ExpHeap h;
  h.sets_.clear();
  for (const auto& keys : sets) {
    LinkedSet s;
    std::vector<Handle> hs;
    for (UserKey k : keys) {
      Node* node = h.pool_.acquire({k, h.next_seq_++});
      s.append(node);
      hs.push_back(NodePool::handle_of(node));
    }
    h.n_ += s.size();
    h.sets_.push_back(std::move(s));
    if (handles) handles->push_back(std::move(hs));
  }
  if (h.sets_.empty()) h.sets_.emplace_back();
  h.pivots_.assign(h.sets_.size() - 1, Key::highest());
  Key next = Key::highest();
  for (std::size_t t = h.sets_.size(); t-- > 1;) {
    if (!h.sets_[t].empty()) next = h.sets_[t].min_node()->key;
    h.pivots_[t - 1] = next;
  }
  return h;
}

Handle ExpHeap::insert(UserKey k) {
  const Snapshot before = snapshot();
  Node* node = pool_.acquire({k, next_seq_++});
  const std::size_t i = locate(node->key);
  sets_[i - 1].append(node, &meter_);
  ++n_;
  record(LedgerOp::Insert, before, static_cast<std::int64_t>(i));
  if (static_cast<std::int64_t>(sets_[i - 1].size()) == capacity(i)) push(i);
  return NodePool::handle_of(node);
}

UserKey ExpHeap::delete_min() {
  if (n_ == 0) throw HeapError(ErrorCode::EmptyHeap, "delete_min on an empty heap");
  if (sets_[0].empty()) pull(1);
  const Snapshot before = snapshot();
  const auto l_before = static_cast<std::int64_t>(sets_.size());
  LinkedSet& s1 = sets_[0];
  Node* min = s1.min_node(&meter_);
  s1.remove(min, &meter_);
  const UserKey out = min->key.user;
  pool_.release(min);
  --n_;
  if (n_ == 0) {
    sets_.resize(1);
    pivots_.clear();
  } else if (sets_.size() > 1 && pow2(sets_.size() - 1) > static_cast<std::int64_t>(n_)) {
    LinkedSet last = std::move(sets_.back());
    sets_.pop_back();
    pivots_.pop_back();
    sets_.back().concat(last, &meter_);
  }
  record(LedgerOp::DeleteMin, before, 1, l_before);
  return out;
}

void ExpHeap::decrease_key(Handle h, UserKey k) {
  Node* node = pool_.resolve(h);
  if (k > node->key.user) throw HeapError(ErrorCode::KeyIncrease, "decrease_key would increase the key");
  const Snapshot before = snapshot();
  const std::size_t src = locate(node->key);
  sets_[src - 1].remove(node, &meter_);
  node->key.user = k;
  const std::size_t dst = locate(node->key);
  sets_[dst - 1].append(node, &meter_);
  record(LedgerOp::DecreaseKey, before, static_cast<std::int64_t>(src), static_cast<std::int64_t>(dst));
  if (static_cast<std::int64_t>(sets_[dst - 1].size()) == capacity(dst)) push(dst);
}

UserKey ExpHeap::find_min() const {
  if (n_ == 0) throw HeapError(ErrorCode::EmptyHeap, "find_min on an empty heap");
  for (const LinkedSet& s : sets_) {
    if (!s.empty()) return s.min_node()->key.user;
  }
  return 0;
}

void ExpHeap::push(std::size_t i) {
  require(i >= 1 && i <= sets_.size() && static_cast<std::int64_t>(sets_[i - 1].size()) == capacity(i),
          "push needs a full S_i");
  const Snapshot before = snapshot();
  LinkedSet x = std::move(sets_[i - 1]);
  // X's lower bound: the exact minimum for the set that overflowed, and the
  // displaced set's old pivot further down the chain.
  Key lower = x.min_node(&meter_)->key;
  std::size_t j = i + 1;
  for (;;) {
    const auto xs = static_cast<std::int64_t>(x.size());
    require(pow2(j - 1) <= xs && xs <= 3 * pow2(j - 1), "push carries a set outside [2^{j-1}, 3*2^{j-1}]");
    if (j == sets_.size() + 1) {
      sets_.push_back(std::move(x));
      pivots_.push_back(lower);
      meter_.list_links += 2;
      break;
    }
    LinkedSet& sj = sets_[j - 1];
    if (static_cast<std::int64_t>(sj.size()) < pow2(j)) {
      sj.concat(x, &meter_);
      pivots_[j - 2] = lower;
      break;
    }
    LinkedSet displaced = std::move(sj);
    const Key displaced_lower = pivots_[j - 2];
    sj = std::move(x);
    pivots_[j - 2] = lower;
    meter_.list_links += 2;
    x = std::move(displaced);
    lower = displaced_lower;
    ++j;
  }
  record(LedgerOp::Push, before, static_cast<std::int64_t>(i), static_cast<std::int64_t>(j));
}

void ExpHeap::pull(std::size_t i) {
  require(i >= 1 && i <= sets_.size() && sets_[i - 1].empty(), "pull needs an empty S_i");
  const Snapshot before = snapshot();
  std::size_t m = i + 1;
  while (m <= sets_.size() && sets_[m - 1].empty()) ++m;
  require(m <= sets_.size(), "pull with every lower level empty");
  const auto sm = static_cast<std::int64_t>(sets_[m - 1].size());
  std::size_t top = 0;  // largest level t < m with 2^{t-1} < |S_m|, 0 if none
  for (std::size_t t = m - 1; t >= i && t >= 1; --t) {
    if (pow2(t - 1) < sm) {
      top = t;
      break;
    }
  }
  pull_rec(i);
  record(LedgerOp::Pull, before, static_cast<std::int64_t>(top), static_cast<std::int64_t>(m));
}

void ExpHeap::pull_rec(std::size_t i) {
  if (sets_[i].empty()) pull_rec(i + 1);
  LinkedSet& below = sets_[i];  // S_{i+1}
  const std::int64_t want = pow2(i - 1);
  if (static_cast<std::int64_t>(below.size()) <= want) {
    sets_[i - 1] = std::move(below);
    pivots_[i - 1] = i + 1 < sets_.size() ? pivots_[i] : Key::highest();
    meter_.list_links += 2;
    return;
  }
  Split parts = split_by_rank(below, static_cast<std::size_t>(want), selector_, &meter_);
  sets_[i - 1] = std::move(parts.low);
  sets_[i] = std::move(parts.high);
  pivots_[i - 1] = parts.pivot;
}

Potential ExpHeap::potential() const {
  Potential p;
  std::int64_t prefix = 0;
  for (std::size_t i = 1; i <= sets_.size(); ++i) {
    const auto s = static_cast<std::int64_t>(sets_[i - 1].size());
    prefix += s;
    p.parts[0] += std::max<std::int64_t>(0, s - 5 * pow2(i - 1));
    p.parts[1] += s / pow2(i);
    p.parts[2] += std::max<std::int64_t>(0, pow2(i - 1) - prefix);
  }
  return p;
}

std::string ExpHeap::digest() const {
  std::ostringstream os;
  os << "exp n=" << n_ << " l=" << sets_.size() << " sizes=[";
  for (std::size_t i = 0; i < sets_.size(); ++i) os << (i ? "," : "") << sets_[i].size();
  os << "] pivots=[";
  for (std::size_t i = 0; i < pivots_.size(); ++i) os << (i ? "," : "") << pivots_[i];
  os << ']';
  return os.str();
}

std::size_t ExpHeap::locate(const Key& k) { return pivot_search(pivots_, k, &meter_) + 1; }

void ExpHeap::require(bool ok, const char* what) const {
  if (!ok) throw HeapError(ErrorCode::Precondition, std::string(what) + " (" + digest() + ")");
}

void ExpHeap::record(LedgerOp op, const Snapshot& before, std::int64_t index, std::int64_t aux) {
  if (!ledger_) return;
  LedgerRow row;
  row.heap = HeapKind::Exp;
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
