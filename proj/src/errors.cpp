#include "thyp/errors.hpp"

namespace thyp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUnitDeterminant: return "NonUnitDeterminant";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::NotConjugate: return "NotConjugate";
    case ErrorCode::IndexRoundingUnstable: return "IndexRoundingUnstable";
    case ErrorCode::DegenerateRange: return "DegenerateRange";
    case ErrorCode::EllipticHasNoHyp0Lift: return "EllipticHasNoHyp0Lift";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::NotHP: return "NotHP";
    case ErrorCode::RelatorNotCentral: return "RelatorNotCentral";
    case ErrorCode::RelatorViolated: return "RelatorViolated";
    case ErrorCode::BoundaryElliptic: return "BoundaryElliptic";
    case ErrorCode::InvalidSplit: return "InvalidSplit";
    case ErrorCode::UnreachableTarget: return "UnreachableTarget";
    case ErrorCode::SolveFailed: return "SolveFailed";
    case ErrorCode::TargetOutsideImage: return "TargetOutsideImage";
    case ErrorCode::InfeasibleRequest: return "InfeasibleRequest";
    case ErrorCode::NotSupported: return "NotSupported";
    case ErrorCode::UnsupportedCurve: return "UnsupportedCurve";
    case ErrorCode::NotTypePreserving: return "NotTypePreserving";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SelfVerificationFailed: return "SelfVerificationFailed";
  }
  return "Unknown";
}

}  // namespace thyp
