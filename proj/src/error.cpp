#include "nbasis/error.hpp"

namespace nbasis {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::TraceZero: return "TraceZero";
    case ErrorCode::EvaluationPointInPrimeField: return "EvaluationPointInPrimeField";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::BadRootOfUnity: return "BadRootOfUnity";
    case ErrorCode::PointOffCurve: return "PointOffCurve";
    case ErrorCode::ExhaustedSearch: return "ExhaustedSearch";
    case ErrorCode::NoDegreeNFactor: return "NoDegreeNFactor";
    case ErrorCode::SignCheckFailed: return "SignCheckFailed";
    case ErrorCode::NTorsionMismatch: return "NTorsionMismatch";
    case ErrorCode::ConstantCheckFailed: return "ConstantCheckFailed";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

void raise(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace nbasis
