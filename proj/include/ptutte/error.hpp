#pragma once

#include <stdexcept>
#include <string>

namespace ptutte {

enum class ErrorCode {
  MalformedInput,
  OutOfRange,
  Precondition,
  LimitExceeded,
};

/// Base exception for every failure raised by the core library. The C API
/// maps the code onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ptutte
