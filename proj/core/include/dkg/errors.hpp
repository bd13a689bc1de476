#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dkg {

enum class ErrorCode {
  // configuration / validation
  DimensionMismatch,
  ParityCoupling,
  MuOutOfRange,
  IndexOutOfRange,
  NegativeDegree,
  InvalidArgument,
  UnknownFigure,
  // special functions
  PoleAtNonPositiveInteger,
  ParameterPole,
  NonConvergence,
  BranchCutInput,
  GammaPole,
  // operators and physics
  EvaluationAtOrigin,
  ImaginaryEnergy,
  GridTooCoarse,
  SupercriticalCharge,
  DegenerateDenominator,
  SubcriticalCharge,
  NonPropagatingEnergy,
  DivergentDensity,
  // numerical oracle
  NonConfining,
  BisectionBracketFailure,
  MaxDepthExceeded,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for errors caused by bad input parameters, false for numerical
/// failures (the CLI maps these to exit codes 1 and 2).
bool is_validation_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dkg
