#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gaspin {

enum class ErrorCode {
  InvalidSignature,
  SignatureMismatch,
  GradeOutOfRange,
  DimensionUnsupported,
  InvalidArgument,
  NotSpinElement,
  LambdaNotPositive,
  NotSimpleBivector,
  RhoNegative,
  BetaOutOfRange,
  ParametrisationInconsistent,
  ParseError,
};

/// Stable machine-readable name, e.g. "LambdaNotPositive".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax errors from the multivector text grammar carry the 0-based
/// character offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gaspin
