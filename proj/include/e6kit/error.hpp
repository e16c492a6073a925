#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace e6kit {

enum class ErrorCode {
  InvalidFieldSpec,
  InvalidArgument,
  MixedFields,
  DivisionByZero,
  NonArithmeticField,
  AlgebraMismatch,
  ModelMismatch,
  SingularElement,
  SingularMatrix,
  ZeroMultiplier,
  NotUnimodular,
  NotAutomorphism,
  NotNormPreserving,
  NotUnitNorm,
  NotOrderTwo,
  NotCommuting,
  NoValidOrdering,
  NoSuchV,
  CarrierMismatch,
  FormNotInvariant,
  ZeroParameter,
  ArityMismatch,
  UnrecognizedType,
  ZeroArgument,
  ParseError,
  Internal,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidFieldSpec: return "InvalidFieldSpec";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NonArithmeticField: return "NonArithmeticField";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::SingularElement: return "SingularElement";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::NotNormPreserving: return "NotNormPreserving";
    case ErrorCode::NotUnitNorm: return "NotUnitNorm";
    case ErrorCode::NotOrderTwo: return "NotOrderTwo";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NoValidOrdering: return "NoValidOrdering";
    case ErrorCode::NoSuchV: return "NoSuchV";
    case ErrorCode::CarrierMismatch: return "CarrierMismatch";
    case ErrorCode::FormNotInvariant: return "FormNotInvariant";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::UnrecognizedType: return "UnrecognizedType";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace e6kit
