#include "partheap/errors.hpp"

namespace partheap {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyHeap: return "empty-heap";
    case ErrorCode::KeyIncrease: return "key-increase";
    case ErrorCode::KeyDecrease: return "key-decrease";
    case ErrorCode::DeadHandle: return "dead-handle";
    case ErrorCode::RankOutOfRange: return "rank-out-of-range";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::MalformedTrace: return "malformed-trace";
  }
  return "unknown";
}

}  // namespace partheap
