#pragma once

#include <stdexcept>
#include <string>

namespace specgeo {

/// Error categories surfaced by the library. Geometry and assembly routines
/// throw; iterative solvers report non-convergence through their result
/// structs instead.
enum class ErrorCode {
  InvalidSpec,
  InvalidPoint,
  InvalidTangent,
  InvalidFrame,
  UnrealizedSpace,
  BeyondInjectivityRadius,
  CutLocus,
  DomainError,
  CrossingViolation,
  KindError,
  DiameterViolation,
  DegenerateTriangle,
  NonManifold,
  SolverNonConvergence,
  ZeroFunction,
  VertexAtCenter,
  BallViolation,
  UnsupportedFamily,
  IoError,
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

}  // namespace specgeo
