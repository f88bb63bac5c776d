#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace barn {

enum class ErrorCode {
  kInvalidParameter,  // non-positive or non-finite dimension, malformed input
  kOutOfDomain,       // roof angle outside the supported range
  kSolverFailure,     // internal numerical guarantee violated
};

std::string_view to_string(ErrorCode code);

/// Error raised by every library operation on bad input.
///
/// `param()` names the offending quantity using the library's vocabulary
/// ("volume", "floor", "height", "width", "length", "alpha", "r", "k",
/// "resolution", ...). Front ends translate it into their own flag or
/// query-parameter names.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string param, const std::string& message)
      : std::runtime_error(message), code_(code), param_(std::move(param)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& param() const noexcept { return param_; }

 private:
  ErrorCode code_;
  std::string param_;
};

namespace detail {

// Throws kInvalidParameter unless value is finite and > 0.
void require_positive(double value, const char* param);

}  // namespace detail

}  // namespace barn
