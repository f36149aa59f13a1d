#include "partheap/linked_set.hpp"

namespace partheap {

void LinkedSet::append(Node* node, CostMeter* meter) {
  node->next = nullptr;
  node->prev = tail_;
  if (tail_) {
    tail_->next = node;
  } else {
    head_ = node;
  }
  tail_ = node;
  ++size_;
  if (meter) {
    ++meter->node_moves;
    meter->list_links += 3;
  }
}

void LinkedSet::remove(Node* node, CostMeter* meter) {
  if (node->prev) {
    node->prev->next = node->next;
  } else {
    head_ = node->next;
  }
  if (node->next) {
    node->next->prev = node->prev;
  } else {
    tail_ = node->prev;
  }
  node->prev = node->next = nullptr;
  --size_;
  if (meter) meter->list_links += 2;
}

void LinkedSet::concat(LinkedSet& other, CostMeter* meter) {
  if (other.empty()) return;
  if (empty()) {
    steal(other);
    return;
  }
  tail_->next = other.head_;
  other.head_->prev = tail_;
  tail_ = other.tail_;
  size_ += other.size_;
  other.head_ = other.tail_ = nullptr;
  other.size_ = 0;
  if (meter) meter->list_links += 2;
}

Node* LinkedSet::min_node(CostMeter* meter) const {
  Node* best = head_;
  std::uint64_t cmp = 0;
  for (Node* n = head_ ? head_->next : nullptr; n; n = n->next) {
    ++cmp;
    if (n->key < best->key) best = n;
  }
  if (meter) meter->comparisons += cmp;
  return best;
}

std::size_t LinkedSet::traverse_count() const {
  std::size_t c = 0;
  for (const Node* n = head_; n; n = n->next) ++c;
  return c;
}

}  // namespace partheap
