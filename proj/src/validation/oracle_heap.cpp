#include "partheap/oracle_heap.hpp"

#include <string>

#include "partheap/errors.hpp"

namespace partheap {

Handle OracleHeap::insert(UserKey k) {
  const Key key{k, by_handle_.size() + 1};
  keys_.insert(key);
  by_handle_.push_back(key);
  alive_.push_back(true);
  return {static_cast<std::uint32_t>(by_handle_.size() - 1), 0};
}

UserKey OracleHeap::delete_min() {
  if (keys_.empty()) throw HeapError(ErrorCode::EmptyHeap, "delete_min on an empty heap");
  const Key k = *keys_.begin();
  keys_.erase(keys_.begin());
  alive_[k.seq - 1] = false;
  return k.user;
}

void OracleHeap::decrease_key(Handle h, UserKey k) {
  const Key& cur = live_key(h);
  if (k > cur.user) throw HeapError(ErrorCode::KeyIncrease, "decrease_key would increase the key");
  keys_.erase(cur);
  by_handle_[h.index].user = k;
  keys_.insert(by_handle_[h.index]);
}

UserKey OracleHeap::find_min() const {
  if (keys_.empty()) throw HeapError(ErrorCode::EmptyHeap, "find_min on an empty heap");
  return keys_.begin()->user;
}

UserKey OracleHeap::key_of(Handle h) const { return live_key(h).user; }

std::string OracleHeap::digest() const {
  std::string s = "oracle n=" + std::to_string(keys_.size());
  if (!keys_.empty()) s += " min=" + std::to_string(keys_.begin()->user);
  return s;
}

std::vector<UserKey> OracleHeap::sorted_keys() const {
  std::vector<UserKey> out;
  out.reserve(keys_.size());
  for (const Key& k : keys_) out.push_back(k.user);
  return out;
}

const Key& OracleHeap::live_key(Handle h) const {
  if (h.generation != 0 || h.index >= by_handle_.size() || !alive_[h.index]) {
    throw HeapError(ErrorCode::DeadHandle, "handle does not refer to a live element");
  }
  return by_handle_[h.index];
}

}  // namespace partheap
