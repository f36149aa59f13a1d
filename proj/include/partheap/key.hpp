#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace partheap {

using UserKey = std::int64_t;

// Ordering key stored in every node and used for pivots. Ties between equal
// user keys are broken by the insertion sequence number, which stays with the
// element through decrease-key and increase-key.
struct Key {
  UserKey user = 0;
  std::uint64_t seq = 0;

  friend constexpr auto operator<=>(const Key&, const Key&) = default;

  // Pivot sentinels. Live elements carry seq >= 1, so lowest() is strictly
  // below every live key and highest() strictly above.
  static constexpr Key lowest() { return {std::numeric_limits<UserKey>::min(), 0}; }
  static constexpr Key highest() {
    return {std::numeric_limits<UserKey>::max(), std::numeric_limits<std::uint64_t>::max()};
  }
};

inline std::ostream& operator<<(std::ostream& os, const Key& k) {
  if (k == Key::lowest()) return os << "-inf";
  if (k == Key::highest()) return os << "+inf";
  return os << k.user << '#' << k.seq;
}

}  // namespace partheap
