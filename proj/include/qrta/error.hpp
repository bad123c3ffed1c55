#pragma once

#include <stdexcept>
#include <string>

namespace qrta {

enum class ErrorCode {
  invalid_argument = 1,
  domain = 2,
  io = 3,
  internal = 4,
};

/// Every failure raised by the library carries one of these codes so the
/// C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qrta
