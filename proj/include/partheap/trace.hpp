#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "partheap/key.hpp"

namespace partheap {

// One line of a trace file:
//   i <key>            insert
//   d                  delete_min
//   k <handle> <key>   decrease_key; handle = 0-based ordinal of the insert
// Blank lines and lines starting with '#' are ignored.
struct TraceOp {
  enum class Kind { Insert, DeleteMin, DecreaseKey };
  Kind kind = Kind::Insert;
  UserKey key = 0;
  std::uint64_t target = 0;
};

using Trace = std::vector<TraceOp>;

std::string_view op_name(TraceOp::Kind kind);

// Throws HeapError(MalformedTrace) naming the offending line.
Trace parse_trace(std::istream& in);
Trace parse_trace_text(std::string_view text);
void write_trace(std::ostream& out, const Trace& trace);
std::string format_trace(const Trace& trace);

}  // namespace partheap
