#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace skel {

// Machine readable failure reasons. Validators throw Error with one of these
// codes on the first violation they find; the CLI maps any Error to exit
// status 1 and prints the code name together with the message.
enum class Errc {
  // document layer
  SyntaxError,
  SchemaError,
  // weighted complexes
  MissingSingleton,
  NotSubsetClosed,
  SpecialFiberRelationViolated,
  RestrictionIncoherent,
  DimensionMismatch,
  NonAdjacentClassNonzero,
  UnknownVertex,
  UnknownFace,
  NotOnFace,
  NegativeCoordinate,
  // metrizations
  StarSupportMismatch,
  IncompatibleGerms,
  NotLinearGerm,
  // skeleton morphisms
  DegreeRelationViolated,
  ImageNotAFace,
  ClassIncoherent,
  NaturalityViolated,
  ImageGermUndefined,
  // curve skeletons
  Empty,
  NotSimple,
  Disconnected,
  NotAPermutation,
  // decomposition data
  LoopEdge,
  BoundExceeded,
  NegativeCount,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace skel
