#pragma once

#include <stdexcept>
#include <string>

namespace knotoid {

enum class ErrorCode {
  DegenerateIntersection,
  PointOnLoop,
  NonGenericRay,
  NotClosedOnSurface,
  UnknownCrossing,
  UnassignedCrossing,
  NoRoom,
  TopologyCorruption,
  ExtendedStateEncountered,
  MixedClassificationAmbiguity,
  OddCrossingParity,
  FlavorMismatch,
  NonInvertible,
  RoutingCollision,
  ParseError,
  ValidationFailed,
  UnknownExample,
  BadArgument,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace knotoid
