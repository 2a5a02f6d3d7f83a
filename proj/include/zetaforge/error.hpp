#pragma once

#include <stdexcept>
#include <string>

namespace zetaforge {

enum class ErrorCode {
  InvalidInput,
  NotDivisible,
  DivisionByZero,
  NotNumerical,
  EmptyGenerators,
  TruncationTooShort,
  InvalidCurveSpec,
  DecompositionFailure,
  InversionFailure,
  UnknownSingularity,
};

const char* to_string(ErrorCode code) noexcept;

// Every domain failure in the library is reported through this type; the C
// layer maps `code()` onto its status enum.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zetaforge
