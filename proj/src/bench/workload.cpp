#include "partheap/workload.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <set>
#include <utility>

namespace partheap {
namespace {

// Mirror of the live elements so the generator can target minimum, maximum
// or random elements in O(log n).
class LiveModel {
 public:
  std::uint64_t insert(UserKey k) {
    const std::uint64_t id = keys_.size();
    keys_.push_back(k);
    live_.push_back(true);
    pos_.push_back(ids_.size());
    ids_.push_back(id);
    ordered_.insert({k, id});
    return id;
  }
  std::uint64_t pop_min() {
    const std::uint64_t id = ordered_.begin()->second;
    erase(id);
    return id;
  }
  void decrease(std::uint64_t id, UserKey k) {
    ordered_.erase({keys_[id], id});
    keys_[id] = k;
    ordered_.insert({k, id});
  }
  bool empty() const { return ids_.empty(); }
  bool is_live(std::uint64_t id) const { return id < keys_.size() && live_[id]; }
  std::uint64_t inserted() const { return keys_.size(); }
  std::size_t size() const { return ids_.size(); }
  std::uint64_t random_live(std::mt19937_64& rng) const {
    return ids_[std::uniform_int_distribution<std::size_t>(0, ids_.size() - 1)(rng)];
  }
  std::uint64_t min_id() const { return ordered_.begin()->second; }
  std::uint64_t max_id() const { return std::prev(ordered_.end())->second; }
  UserKey key(std::uint64_t id) const { return keys_[id]; }
  UserKey min_key() const { return ordered_.begin()->first; }

 private:
  void erase(std::uint64_t id) {
    ordered_.erase({keys_[id], id});
    live_[id] = false;
    const std::size_t p = pos_[id];
    ids_[p] = ids_.back();
    pos_[ids_[p]] = p;
    ids_.pop_back();
  }

  std::vector<UserKey> keys_;
  std::vector<bool> live_;
  std::vector<std::size_t> pos_;
  std::vector<std::uint64_t> ids_;
  // Ties between equal keys order by id, which is the heaps' insertion order.
  std::set<std::pair<UserKey, std::uint64_t>> ordered_;
};

class Builder {
 public:
  explicit Builder(std::uint64_t seed) : rng(seed) {}

  std::uint64_t insert(UserKey k) {
    trace.push_back({TraceOp::Kind::Insert, k, 0});
    return model.insert(k);
  }
  std::uint64_t delete_min() {
    const std::uint64_t id = model.pop_min();
    trace.push_back({TraceOp::Kind::DeleteMin, 0, 0});
    return id;
  }
  void decrease(std::uint64_t id, UserKey k) {
    model.decrease(id, k);
    trace.push_back({TraceOp::Kind::DecreaseKey, k, id});
  }
  UserKey uniform(UserKey lo, UserKey hi) { return std::uniform_int_distribution<UserKey>(lo, hi)(rng); }
  double coin() { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

  std::mt19937_64 rng;
  LiveModel model;
  Trace trace;
};

constexpr UserKey kKeySpan = 1'000'000'000;

Trace random_trace(std::size_t ops, std::uint64_t seed) {
  Builder b(seed);
  while (b.trace.size() < ops) {
    const double r = b.coin();
    if (b.model.empty() || r < 0.5) {
      b.insert(b.uniform(0, kKeySpan));
    } else if (r < 0.75) {
      b.delete_min();
    } else {
      const std::uint64_t id = b.model.random_live(b.rng);
      b.decrease(id, b.model.key(id) - b.uniform(0, kKeySpan / 100));
    }
  }
  return b.trace;
}

Trace monotone_trace(std::size_t ops, std::uint64_t seed, bool ascending) {
  Builder b(seed);
  UserKey k = 0;
  for (std::size_t i = 0; i < ops; ++i) {
    k += b.uniform(1, 16);
    b.insert(ascending ? k : -k);
  }
  return b.trace;
}

Trace dijkstra_trace(std::size_t ops, std::uint64_t seed) {
  Builder b(seed);
  UserKey settled = 0;
  while (b.trace.size() < ops) {
    const double r = b.coin();
    if (b.model.empty() || r < 0.4) {
      b.insert(settled + b.uniform(1, 1000));
    } else if (r < 0.7) {
      settled = b.model.min_key();
      b.delete_min();
    } else {
      // Relaxations mostly touch vertices discovered recently.
      std::uint64_t id = b.model.random_live(b.rng);
      for (int attempt = 0; attempt < 4; ++attempt) {
        const auto back = static_cast<std::uint64_t>(b.uniform(1, 64));
        if (back <= b.model.inserted() && b.model.is_live(b.model.inserted() - back)) {
          id = b.model.inserted() - back;
          break;
        }
      }
      b.decrease(id, std::max(settled, b.model.key(id) - b.uniform(0, 500)));
    }
  }
  return b.trace;
}

Trace sawtooth_trace(std::size_t ops, std::uint64_t seed) {
  Builder b(seed);
  while (b.trace.size() < ops) {
    const auto burst = static_cast<std::size_t>(b.uniform(16, 256));
    for (std::size_t i = 0; i < burst && b.trace.size() < ops; ++i) {
      if (!b.model.empty() && b.coin() < 0.1) {
        const std::uint64_t id = b.model.random_live(b.rng);
        b.decrease(id, b.model.key(id) - b.uniform(0, kKeySpan / 100));
      } else {
        b.insert(b.uniform(0, kKeySpan));
      }
    }
    const auto drain = static_cast<std::size_t>(b.uniform(static_cast<UserKey>(burst / 2), static_cast<UserKey>(burst)));
    for (std::size_t i = 0; i < drain && !b.model.empty() && b.trace.size() < ops; ++i) b.delete_min();
  }
  return b.trace;
}

Trace adversarial_dk_trace(std::size_t ops, std::uint64_t seed) {
  Builder b(seed);
  const std::size_t warmup = ops / 4;
  while (b.trace.size() < warmup) b.insert(b.uniform(0, kKeySpan));
  while (b.trace.size() < ops) {
    const double r = b.coin();
    if (b.model.empty() || (r >= 0.7 && r < 0.85)) {
      b.insert(b.uniform(0, kKeySpan));
    } else if (r < 0.7) {
      b.decrease(b.model.max_id(), b.model.min_key() - b.uniform(1, 10));
    } else {
      b.delete_min();
    }
  }
  return b.trace;
}

Trace decrease_all_trace(std::size_t ops, std::uint64_t seed) {
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  Builder b(seed);
  std::vector<std::uint64_t> pending;  // inserted, not yet decreased
  std::vector<std::size_t> slot_of;    // id -> index in pending, or kNone
  auto decrease_pending = [&](std::size_t slot) {
    const std::uint64_t id = pending[slot];
    pending[slot] = pending.back();
    slot_of[pending[slot]] = slot;
    pending.pop_back();
    slot_of[id] = kNone;
    b.decrease(id, b.model.key(id) - b.uniform(0, kKeySpan / 100));
  };
  while (b.trace.size() < ops) {
    const std::size_t left = ops - b.trace.size();
    if (!pending.empty() && left <= pending.size()) {
      decrease_pending(pending.size() - 1);
      continue;
    }
    const double r = b.coin();
    if (b.model.empty() || (r < 0.4 && left > pending.size() + 1)) {
      const std::uint64_t id = b.insert(b.uniform(0, kKeySpan));
      slot_of.push_back(pending.size());
      pending.push_back(id);
    } else if (r < 0.8 && !pending.empty()) {
      decrease_pending(std::uniform_int_distribution<std::size_t>(0, pending.size() - 1)(b.rng));
    } else {
      const std::uint64_t id = b.model.min_id();
      if (slot_of[id] != kNone) {
        // The minimum still owes its decrease; pay it before popping.
        if (left < pending.size() + 2) continue;
        decrease_pending(slot_of[id]);
      }
      b.delete_min();
    }
  }
  return b.trace;
}

}  // namespace

std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::Random: return "random";
    case Pattern::Sorted: return "sorted";
    case Pattern::Reverse: return "reverse";
    case Pattern::DijkstraLike: return "dijkstra-like";
    case Pattern::Sawtooth: return "sawtooth";
    case Pattern::AdversarialDk: return "adversarial-dk";
    case Pattern::DecreaseAll: return "decrease-all";
  }
  return "?";
}

const std::vector<Pattern>& all_patterns() {
  static const std::vector<Pattern> all = {Pattern::Random,   Pattern::Sorted,        Pattern::Reverse,
                                           Pattern::DijkstraLike, Pattern::Sawtooth, Pattern::AdversarialDk,
                                           Pattern::DecreaseAll};
  return all;
}

std::optional<Pattern> parse_pattern(std::string_view name) {
  for (Pattern p : all_patterns()) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

Trace generate(Pattern pattern, std::size_t ops, std::uint64_t seed) {
  switch (pattern) {
    case Pattern::Random: return random_trace(ops, seed);
    case Pattern::Sorted: return monotone_trace(ops, seed, true);
    case Pattern::Reverse: return monotone_trace(ops, seed, false);
    case Pattern::DijkstraLike: return dijkstra_trace(ops, seed);
    case Pattern::Sawtooth: return sawtooth_trace(ops, seed);
    case Pattern::AdversarialDk: return adversarial_dk_trace(ops, seed);
    case Pattern::DecreaseAll: return decrease_all_trace(ops, seed);
  }
  return {};
}

}  // namespace partheap
