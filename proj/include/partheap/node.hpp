#pragma once

#include <compare>
#include <cstdint>
#include <deque>
#include <vector>

#include "partheap/key.hpp"

namespace partheap {

struct Node {
  Key key;
  Node* prev = nullptr;
  Node* next = nullptr;
  std::uint32_t index = 0;
  std::uint32_t generation = 0;
  bool alive = false;
};

// Stable reference to an element. Stays valid until the element leaves the
// heap; the generation catches reuse of the underlying storage slot.
struct Handle {
  std::uint32_t index = 0;
  std::uint32_t generation = 0;

  friend constexpr auto operator<=>(const Handle&, const Handle&) = default;
};

// Owns node storage. Addresses never move (std::deque), released slots are
// recycled with a bumped generation.
class NodePool {
 public:
  Node* acquire(const Key& key);
  void release(Node* node);

  // Throws HeapError(DeadHandle) when the handle does not name a live element.
  Node* resolve(Handle h);
  const Node* resolve(Handle h) const;
  bool is_live(Handle h) const;

  static Handle handle_of(const Node* node) { return {node->index, node->generation}; }

 private:
  std::deque<Node> nodes_;
  std::vector<std::uint32_t> free_;
};

}  // namespace partheap
