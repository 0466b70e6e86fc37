#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellcode {

/// Named failure conditions. Every thrown Error carries one of these plus
/// the module that raised it, so callers (and the CLI) can report both.
enum class ErrorKind {
  NotPrime,
  ReducibleModulus,
  DegreeMismatch,
  DivisionByZero,
  FieldMismatch,
  InvalidSubfieldDegree,
  PointNotOnCurve,
  SingularCurve,
  FieldTooLarge,
  CurveMismatch,
  PoleAtPoint,
  ZeroFunction,
  UnsupportedPlace,
  UnsupportedOrder,
  InvalidDegree,
  CharThreeUnsupported,
  DegenerateDenominator,
  UnsupportedPoint,
  NoSolution,
  DuplicatePoints,
  InsufficientPoints,
  BadOrbitPoint,
  OrbitCollision,
  RaggedRows,
  BadBlockLength,
  CodeTooLarge,
  SupportOverlap,
  DegreeOutOfRange,
  NotInvariant,
  ExclusionViolated,
  FunctionInSpace,
  ExponentCaseViolated,
  HypothesisViolated,
  NonIntegralBound,
  SideConditionViolated,
  ParseError,
  ValidationError,
  IoError,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + " [" + module + "]: " + message),
        kind_(kind),
        module_(std::move(module)),
        detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string module_;
  std::string detail_;
};

}  // namespace ellcode
