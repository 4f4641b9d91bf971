#pragma once

#include <stdexcept>
#include <string>

namespace entrobell {

// Reasons an operation can reject its input or fail to complete.
enum class ErrorCode {
  negative_probability,
  not_normalized,
  bad_arity,
  unknown_label,
  same_label,
  overlap,
  out_of_range,
  bad_range,
  io_error,
};

// Stable uppercase name of a code, e.g. "NOT_NORMALIZED".
const char* to_string(ErrorCode code) noexcept;

// The single exception type thrown by this library. The what() text is
// "<CODE>: <detail>"; the code is also available in machine-readable form.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace entrobell
