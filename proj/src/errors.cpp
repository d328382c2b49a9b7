#include "specgeo/errors.hpp"

namespace specgeo {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::InvalidTangent: return "InvalidTangent";
    case ErrorCode::InvalidFrame: return "InvalidFrame";
    case ErrorCode::UnrealizedSpace: return "UnrealizedSpace";
    case ErrorCode::BeyondInjectivityRadius: return "BeyondInjectivityRadius";
    case ErrorCode::CutLocus: return "CutLocus";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::CrossingViolation: return "CrossingViolation";
    case ErrorCode::KindError: return "KindError";
    case ErrorCode::DiameterViolation: return "DiameterViolation";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NonManifold: return "NonManifold";
    case ErrorCode::SolverNonConvergence: return "SolverNonConvergence";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::VertexAtCenter: return "VertexAtCenter";
    case ErrorCode::BallViolation: return "BallViolation";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::IoError: return "IoError";
  }
  return "Error";
}

}  // namespace specgeo
