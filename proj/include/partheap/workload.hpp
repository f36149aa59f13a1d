#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "partheap/trace.hpp"

namespace partheap {

enum class Pattern {
  Random,         // mixed inserts, delete_mins and decrease_keys
  Sorted,         // inserts with increasing keys
  Reverse,        // inserts with decreasing keys
  DijkstraLike,   // monotone pops, inserts and decreases above the last pop
  Sawtooth,       // insert bursts followed by drain bursts
  AdversarialDk,  // every decrease_key targets the current maximum
  DecreaseAll,    // every inserted element receives a decrease_key
};

std::string_view to_string(Pattern p);
std::optional<Pattern> parse_pattern(std::string_view name);
const std::vector<Pattern>& all_patterns();

// Deterministic for a given (pattern, ops, seed). Decrease-keys always name a
// live element and never raise its key.
Trace generate(Pattern pattern, std::size_t ops, std::uint64_t seed);

}  // namespace partheap
