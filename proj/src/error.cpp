#include "zetaforge/error.hpp"

namespace zetaforge {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotNumerical: return "NotNumerical";
    case ErrorCode::EmptyGenerators: return "EmptyGenerators";
    case ErrorCode::TruncationTooShort: return "TruncationTooShort";
    case ErrorCode::InvalidCurveSpec: return "InvalidCurveSpec";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::InversionFailure: return "InversionFailure";
    case ErrorCode::UnknownSingularity: return "UnknownSingularity";
  }
  return "Unknown";
}

}  // namespace zetaforge
