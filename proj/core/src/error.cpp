#include "lieharm/error.hpp"

namespace lieharm {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::UnknownAlgebra: return "UnknownAlgebra";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ThetaNotInvolutive: return "ThetaNotInvolutive";
    case ErrorCode::IndefiniteForm: return "IndefiniteForm";
    case ErrorCode::NotClosedUnderBracket: return "NotClosedUnderBracket";
    case ErrorCode::NonMaximalA: return "NonMaximalA";
    case ErrorCode::ClusteringAmbiguity: return "ClusteringAmbiguity";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::IdealCheckFailure: return "IdealCheckFailure";
    case ErrorCode::NonUnipotentProduct: return "NonUnipotentProduct";
    case ErrorCode::DegeneratePlane: return "DegeneratePlane";
    case ErrorCode::StepTooSmall: return "StepTooSmall";
    case ErrorCode::EvaluationFailure: return "EvaluationFailure";
    case ErrorCode::NoIsotropicVector: return "NoIsotropicVector";
    case ErrorCode::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorCode::DegenerateS: return "DegenerateS";
    case ErrorCode::OrderOutOfRange: return "OrderOutOfRange";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnsupportedFamily:
    case ErrorCode::InvalidParams:
    case ErrorCode::UnknownAlgebra:
    case ErrorCode::MalformedInput:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::StepTooSmall:
    case ErrorCode::NoIsotropicVector:
    case ErrorCode::MultiplicityMismatch:
    case ErrorCode::DegenerateS:
    case ErrorCode::OrderOutOfRange:
      return false;
    default:
      return true;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace lieharm
