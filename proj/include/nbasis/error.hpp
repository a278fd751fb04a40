#pragma once

#include <stdexcept>
#include <string>

namespace nbasis {

enum class ErrorCode {
  DivisionByZero,
  SpecMismatch,
  NonSquare,
  ZeroElement,
  DegenerateInput,
  LengthMismatch,
  NotInvertible,
  TraceZero,
  EvaluationPointInPrimeField,
  OrderTooSmall,
  BadRootOfUnity,
  PointOffCurve,
  ExhaustedSearch,
  NoDegreeNFactor,
  SignCheckFailed,
  NTorsionMismatch,
  ConstantCheckFailed,
  SingularMatrix,
  ParseError,
  InvalidParameter,
};

const char* error_name(ErrorCode code) noexcept;

// Every library failure is reported through this type; what() is prefixed
// with the error name so CLI output is self-describing.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& detail);

}  // namespace nbasis
