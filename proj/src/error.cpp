#include "ellcode/error.hpp"

namespace ellcode {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidSubfieldDegree: return "InvalidSubfieldDegree";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::CurveMismatch: return "CurveMismatch";
    case ErrorKind::PoleAtPoint: return "PoleAtPoint";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::UnsupportedPlace: return "UnsupportedPlace";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::CharThreeUnsupported: return "CharThreeUnsupported";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::UnsupportedPoint: return "UnsupportedPoint";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::DuplicatePoints: return "DuplicatePoints";
    case ErrorKind::InsufficientPoints: return "InsufficientPoints";
    case ErrorKind::BadOrbitPoint: return "BadOrbitPoint";
    case ErrorKind::OrbitCollision: return "OrbitCollision";
    case ErrorKind::RaggedRows: return "RaggedRows";
    case ErrorKind::BadBlockLength: return "BadBlockLength";
    case ErrorKind::CodeTooLarge: return "CodeTooLarge";
    case ErrorKind::SupportOverlap: return "SupportOverlap";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::ExclusionViolated: return "ExclusionViolated";
    case ErrorKind::FunctionInSpace: return "FunctionInSpace";
    case ErrorKind::ExponentCaseViolated: return "ExponentCaseViolated";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NonIntegralBound: return "NonIntegralBound";
    case ErrorKind::SideConditionViolated: return "SideConditionViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace ellcode
