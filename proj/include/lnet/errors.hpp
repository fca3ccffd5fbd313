#pragma once

#include <stdexcept>
#include <string>

namespace lnet {

enum class ErrorKind {
  LightConeSingularity,
  NonIsotropicDirection,
  DegenerateAxis,
  DegenerateSpheres,
  NotConical,
  InitialLineMismatch,
  NotIsotropicConjugate,
  NotNullCongruence,
  NotCirclePacking,
  NotIncircular,
  DegenerateStar,
  ContactElementCase,
  NotConcyclic,
  NotIsothermic,
  NoRealIntersection,
  NotHarmonic,
  UndefinedX,
  InvalidTransform,
  DegenerateImage,
  IndexOutOfRange,
  InvalidGrid,
  SchemaMismatch,
  VersionMismatch,
  ParseError,
  NotASphere,
  PointAtInfinity,
  NonSpacelikeEdge,
  ZeroLengthEdge,
  ClosureFailure,
  InconsistentChoice,
  DegenerateCrossRatio,
  NonpositiveX,
  EmptyNet,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lnet
