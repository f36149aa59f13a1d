#pragma once

#include <cstddef>
#include <iterator>

#include "partheap/cost_meter.hpp"
#include "partheap/node.hpp"

namespace partheap {

// Unordered intrusive doubly-linked list of nodes with an O(1) size counter.
// Append, remove and concatenation are constant time.
class LinkedSet {
 public:
  LinkedSet() = default;
  LinkedSet(const LinkedSet&) = delete;
  LinkedSet& operator=(const LinkedSet&) = delete;
  LinkedSet(LinkedSet&& other) noexcept { steal(other); }
  LinkedSet& operator=(LinkedSet&& other) noexcept {
    if (this != &other) steal(other);
    return *this;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  void append(Node* node, CostMeter* meter = nullptr);
  void remove(Node* node, CostMeter* meter = nullptr);
  // Moves every node of `other` to the end of this set; `other` ends up empty.
  void concat(LinkedSet& other, CostMeter* meter = nullptr);

  // Smallest key in the set; requires a nonempty set. Counts size-1 comparisons.
  Node* min_node(CostMeter* meter = nullptr) const;

  // Walks the list and returns the number of nodes reached. Used by audits to
  // compare against size().
  std::size_t traverse_count() const;

  // Fault-injection hook for auditor tests.
  void unsafe_set_size(std::size_t n) { size_ = n; }

  template <typename NodeT>
  class basic_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Node;
    using difference_type = std::ptrdiff_t;
    using pointer = NodeT*;
    using reference = NodeT&;

    basic_iterator() = default;
    explicit basic_iterator(NodeT* n) : n_(n) {}
    reference operator*() const { return *n_; }
    pointer operator->() const { return n_; }
    basic_iterator& operator++() {
      n_ = n_->next;
      return *this;
    }
    basic_iterator operator++(int) {
      auto t = *this;
      n_ = n_->next;
      return t;
    }
    friend bool operator==(basic_iterator a, basic_iterator b) { return a.n_ == b.n_; }

   private:
    NodeT* n_ = nullptr;
  };
  using iterator = basic_iterator<Node>;
  using const_iterator = basic_iterator<const Node>;

  iterator begin() { return iterator(head_); }
  iterator end() { return iterator(nullptr); }
  const_iterator begin() const { return const_iterator(head_); }
  const_iterator end() const { return const_iterator(nullptr); }

 private:
  void steal(LinkedSet& other) {
    head_ = other.head_;
    tail_ = other.tail_;
    size_ = other.size_;
    other.head_ = other.tail_ = nullptr;
    other.size_ = 0;
  }

  Node* head_ = nullptr;
  Node* tail_ = nullptr;
  std::size_t size_ = 0;
};

}  // namespace partheap
