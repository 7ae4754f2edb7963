#pragma once

#include <stdexcept>
#include <string>

namespace ccc {

enum class ErrorCode {
  kInvalidArgument = 1,
  kDimension = 2,
  kInvalidCodeword = 3,
  kFormat = 4,
  kIo = 5,
};

/// Every failure raised by the core library. The code maps one-to-one onto
/// the `ccc_status` values of the C interface.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace ccc
