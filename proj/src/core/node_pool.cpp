#include "partheap/errors.hpp"
#include "partheap/node.hpp"

namespace partheap {

Node* NodePool::acquire(const Key& key) {
  Node* n;
  if (!free_.empty()) {
    n = &nodes_[free_.back()];
    free_.pop_back();
  } else {
    nodes_.emplace_back();
    n = &nodes_.back();
    n->index = static_cast<std::uint32_t>(nodes_.size() - 1);
  }
  n->key = key;
  n->prev = n->next = nullptr;
  n->alive = true;
  return n;
}

void NodePool::release(Node* node) {
  node->alive = false;
  node->prev = node->next = nullptr;
  ++node->generation;
  free_.push_back(node->index);
}

bool NodePool::is_live(Handle h) const {
  if (h.index >= nodes_.size()) return false;
  const Node& n = nodes_[h.index];
  return n.alive && n.generation == h.generation;
}

Node* NodePool::resolve(Handle h) {
  if (!is_live(h)) throw HeapError(ErrorCode::DeadHandle, "handle does not refer to a live element");
  return &nodes_[h.index];
}

const Node* NodePool::resolve(Handle h) const {
  if (!is_live(h)) throw HeapError(ErrorCode::DeadHandle, "handle does not refer to a live element");
  return &nodes_[h.index];
}

}  // namespace partheap
