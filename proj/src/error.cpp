#include "gaspin/error.hpp"

namespace gaspin {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidSignature: return "InvalidSignature";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::GradeOutOfRange: return "GradeOutOfRange";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotSpinElement: return "NotSpinElement";
    case ErrorCode::LambdaNotPositive: return "LambdaNotPositive";
    case ErrorCode::NotSimpleBivector: return "NotSimpleBivector";
    case ErrorCode::RhoNegative: return "RhoNegative";
    case ErrorCode::BetaOutOfRange: return "BetaOutOfRange";
    case ErrorCode::ParametrisationInconsistent:
      return "ParametrisationInconsistent";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gaspin
