#include "knotoid/errors.hpp"

namespace knotoid {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DegenerateIntersection: return "DegenerateIntersection";
    case ErrorCode::PointOnLoop: return "PointOnLoop";
    case ErrorCode::NonGenericRay: return "NonGenericRay";
    case ErrorCode::NotClosedOnSurface: return "NotClosedOnSurface";
    case ErrorCode::UnknownCrossing: return "UnknownCrossing";
    case ErrorCode::UnassignedCrossing: return "UnassignedCrossing";
    case ErrorCode::NoRoom: return "NoRoom";
    case ErrorCode::TopologyCorruption: return "TopologyCorruption";
    case ErrorCode::ExtendedStateEncountered: return "ExtendedStateEncountered";
    case ErrorCode::MixedClassificationAmbiguity: return "MixedClassificationAmbiguity";
    case ErrorCode::OddCrossingParity: return "OddCrossingParity";
    case ErrorCode::FlavorMismatch: return "FlavorMismatch";
    case ErrorCode::NonInvertible: return "NonInvertible";
    case ErrorCode::RoutingCollision: return "RoutingCollision";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::UnknownExample: return "UnknownExample";
    case ErrorCode::BadArgument: return "BadArgument";
  }
  return "UnknownError";
}

}  // namespace knotoid
