#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace thyp {

enum class ErrorCode {
  NonUnitDeterminant,
  NotHyperbolic,
  NotConjugate,
  IndexRoundingUnstable,
  DegenerateRange,
  EllipticHasNoHyp0Lift,
  UnknownGenerator,
  NotHP,
  RelatorNotCentral,
  RelatorViolated,
  BoundaryElliptic,
  InvalidSplit,
  UnreachableTarget,
  SolveFailed,
  TargetOutsideImage,
  InfeasibleRequest,
  NotSupported,
  UnsupportedCurve,
  NotTypePreserving,
  InvalidArgument,
  ParseError,
  // Raised when a constructor output fails its own verification; always a bug.
  SelfVerificationFailed,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace thyp
