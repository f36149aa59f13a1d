#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace partheap {

enum class ErrorCode {
  EmptyHeap,
  KeyIncrease,
  KeyDecrease,
  DeadHandle,
  RankOutOfRange,
  Precondition,
  MalformedTrace,
};

std::string_view to_string(ErrorCode code);

class HeapError : public std::runtime_error {
 public:
  HeapError(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace partheap
