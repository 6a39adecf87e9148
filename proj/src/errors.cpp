#include "skel/errors.hpp"

namespace skel {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::SyntaxError: return "syntax_error";
    case Errc::SchemaError: return "schema_error";
    case Errc::MissingSingleton: return "missing_singleton";
    case Errc::NotSubsetClosed: return "not_subset_closed";
    case Errc::SpecialFiberRelationViolated: return "special_fiber_relation_violated";
    case Errc::RestrictionIncoherent: return "restriction_incoherent";
    case Errc::DimensionMismatch: return "dimension_mismatch";
    case Errc::NonAdjacentClassNonzero: return "non_adjacent_class_nonzero";
    case Errc::UnknownVertex: return "unknown_vertex";
    case Errc::UnknownFace: return "unknown_face";
    case Errc::NotOnFace: return "not_on_face";
    case Errc::NegativeCoordinate: return "negative_coordinate";
    case Errc::StarSupportMismatch: return "star_support_mismatch";
    case Errc::IncompatibleGerms: return "incompatible_germs";
    case Errc::NotLinearGerm: return "not_linear_germ";
    case Errc::DegreeRelationViolated: return "degree_relation_violated";
    case Errc::ImageNotAFace: return "image_not_a_face";
    case Errc::ClassIncoherent: return "class_incoherent";
    case Errc::NaturalityViolated: return "naturality_violated";
    case Errc::ImageGermUndefined: return "image_germ_undefined";
    case Errc::Empty: return "empty";
    case Errc::NotSimple: return "not_simple";
    case Errc::Disconnected: return "disconnected";
    case Errc::NotAPermutation: return "not_a_permutation";
    case Errc::LoopEdge: return "loop_edge";
    case Errc::BoundExceeded: return "bound_exceeded";
    case Errc::NegativeCount: return "negative_count";
  }
  return "unknown_error";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace skel
