#pragma once

#include "skel/curve_skeleton.hpp"
#include "skel/decomp.hpp"
#include "skel/morphism.hpp"

#include <string>
#include <variant>

namespace skel {

inline constexpr int kFormatVersion = 1;

// Self contained document kinds. Complexes, skeletons, morphisms and
// decomposition data validate fully at parse time.
struct ComplexDoc {
  std::shared_ptr<const WeightedComplex> complex;
};
struct SkeletonDoc {
  CurveSkeleton skeleton;
};
struct MorphismDoc {
  SkeletonMorphism morphism;
};
struct DecompDoc {
  DecompositionDatum datum;
};

// Data only kinds: schema checked at parse time, validated semantically when
// paired with their carrier (a complex or a skeleton) by the caller.
struct FunctionDoc {
  std::map<VertexId, Rat> values;
};
struct BundleDoc {
  std::map<VertexId, Germ> germs;
};
struct CocycleDoc {
  Cocycle cocycle;
};
struct GermFamilyDoc {
  LinGermFamily family;
};

using Document = std::variant<ComplexDoc, SkeletonDoc, MorphismDoc, DecompDoc, FunctionDoc,
                              BundleDoc, CocycleDoc, GermFamilyDoc>;

// Parses a document from its text form. Malformed text raises
// Error(SyntaxError) with a byte offset, schema violations raise
// Error(SchemaError) with the offending path, and semantic violations raise
// the owning module's error.
Document parse_document(const std::string& text);

// Canonical text form: sorted keys, canonical rationals, fixed list orders.
// Serializing the result of a parse reproduces canonical input bytes.
std::string serialize_document(const Document& doc);

Document load_document_file(const std::string& path);

// Line record for enumeration streams: a compact one line rendering of a
// decomposition datum with dense integer tables. Ascending record order
// agrees with the enumeration order.
std::string decomp_record_line(const DecompositionDatum& datum);

}  // namespace skel
