#pragma once

#include <stdexcept>
#include <string>

namespace lieharm {

enum class ErrorCode {
  UnsupportedFamily,
  InvalidParams,
  UnknownAlgebra,
  MalformedInput,
  DimensionMismatch,
  ThetaNotInvolutive,
  IndefiniteForm,
  NotClosedUnderBracket,
  NonMaximalA,
  ClusteringAmbiguity,
  DecompositionFailure,
  IdealCheckFailure,
  NonUnipotentProduct,
  DegeneratePlane,
  StepTooSmall,
  EvaluationFailure,
  NoIsotropicVector,
  MultiplicityMismatch,
  DegenerateS,
  OrderOutOfRange,
};

const char* to_string(ErrorCode code) noexcept;

/// True for failures that indicate a numerical breakdown rather than bad input.
bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lieharm
