#ifndef PHFIBER_ERROR_HPP
#define PHFIBER_ERROR_HPP

#include <stdexcept>
#include <string>

namespace phfiber {

enum class ErrorCode {
  ParseError,
  InvalidFunction,
  InvalidReparametrization,
  ConstantFunction,
  DomainMismatch,
  ResolutionTooLow,
  ClassMismatch,
  NotSameComponent,
  MalformedBarcode,
  RepeatedEndpoints,
  TooLarge,
  BoundaryViolation,
  InvalidSurface,
  InconsistentBarcode,
  NegativeCount,
  NotClassified,
  RequiresPositiveSaddles,
  VerificationFailed,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidFunction: return "InvalidFunction";
    case ErrorCode::InvalidReparametrization: return "InvalidReparametrization";
    case ErrorCode::ConstantFunction: return "ConstantFunction";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::ResolutionTooLow: return "ResolutionTooLow";
    case ErrorCode::ClassMismatch: return "ClassMismatch";
    case ErrorCode::NotSameComponent: return "NotSameComponent";
    case ErrorCode::MalformedBarcode: return "MalformedBarcode";
    case ErrorCode::RepeatedEndpoints: return "RepeatedEndpoints";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BoundaryViolation: return "BoundaryViolation";
    case ErrorCode::InvalidSurface: return "InvalidSurface";
    case ErrorCode::InconsistentBarcode: return "InconsistentBarcode";
    case ErrorCode::NegativeCount: return "NegativeCount";
    case ErrorCode::NotClassified: return "NotClassified";
    case ErrorCode::RequiresPositiveSaddles: return "RequiresPositiveSaddles";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

/// True for errors caused by ill-formed input rather than by the mathematics
/// of a well-formed request.
inline bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidFunction:
    case ErrorCode::InvalidReparametrization:
    case ErrorCode::MalformedBarcode:
    case ErrorCode::InvalidSurface:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace phfiber

#endif  // PHFIBER_ERROR_HPP
