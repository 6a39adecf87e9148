#pragma once

#include "skel/complex.hpp"

namespace skel {

// A function given by one rational value per vertex and extended affinely in
// barycentric coordinates over every face.
struct SimpleFunction {
  std::map<VertexId, Rat> values;
  Rat at(VertexId v) const;
};

// Requires a value for exactly the vertices of the complex.
SimpleFunction make_simple_function(const WeightedComplex& wc, std::map<VertexId, Rat> values);

// The function of a vertical divisor sum_i a_i D_i: value a_i / mult(i) at
// vertex i. Missing coefficients default to zero.
SimpleFunction divisor_to_simple_function(const WeightedComplex& wc,
                                          const std::map<VertexId, Rat>& coefficients);

Rat evaluate(const WeightedComplex& wc, const SimpleFunction& f, const Face& face,
             const RatVec& barycentric);
Rat evaluate_at_ambient(const WeightedComplex& wc, const SimpleFunction& f,
                        const RatVec& ambient);

// Derivative class of f along face I:
//   sum over vertices v of mult(v) * f(v) * c_{v,I}
// inside the class space of I. Only vertices adjacent to I contribute.
RatVec derivative(const WeightedComplex& wc, const SimpleFunction& f, const Face& face);

struct FaceFlags {
  bool linear = false;          // derivative class vanishes
  bool convex = false;          // derivative class is nef
  bool strictly_convex = false; // derivative class is ample
};

struct FaceClassification {
  std::map<Face, FaceFlags> flags;
  std::vector<Face> linear_faces() const;
  std::vector<Face> convex_faces() const;
  std::vector<Face> strictly_convex_faces() const;
};

FaceClassification classify_faces(const WeightedComplex& wc, const SimpleFunction& f);

enum class FaceProperty { Linear, Convex, StrictlyConvex };

// True when every listed face carries the property. Unknown faces error.
bool is_on_subset(const FaceClassification& classification, FaceProperty property,
                  const std::vector<Face>& faces);

}  // namespace skel
