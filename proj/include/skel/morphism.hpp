#pragma once

#include "skel/metrized_bundle.hpp"

namespace skel {

// Raw input for a morphism of weighted complexes, before validation.
struct MorphismData {
  std::shared_ptr<const WeightedComplex> source;
  std::shared_ptr<const WeightedComplex> target;
  // Nonnegative integer pullback multiplicities: matrix[src vertex][tgt
  // vertex]. Missing entries are zero.
  std::map<VertexId, std::map<VertexId, long long>> matrix;
  // Minimal target face containing the image of each source face.
  std::map<Face, Face> face_images;
  // beta_I : class space of face_images[I] -> class space of I.
  std::map<Face, RatMatrix> class_pullbacks;
};

// A validated morphism. Checks, in order:
//  - the degree relation sum_j mult'(j) * A[i][j] = mult(i) per source vertex,
//  - face images exist, are faces, and equal the support
//      { j : A[i][j] > 0 for some i in I }  (minimality is enforced),
//  - class coherence: beta_I(c'_{j,J(I)}) = sum_i A[i][j] * c_{i,I},
//  - naturality: rho_{I->I'} . beta_I = beta_{I'} . rho'_{J(I)->J(I')} for
//    nested source faces I inside I'.
class SkeletonMorphism {
public:
  static SkeletonMorphism validate(MorphismData data);

  const std::shared_ptr<const WeightedComplex>& source() const { return source_; }
  const std::shared_ptr<const WeightedComplex>& target() const { return target_; }
  long long entry(VertexId src, VertexId tgt) const;
  const Face& face_image(const Face& f) const;
  const RatMatrix& class_pullback(const Face& f) const;

private:
  SkeletonMorphism() = default;

  std::shared_ptr<const WeightedComplex> source_;
  std::shared_ptr<const WeightedComplex> target_;
  std::map<VertexId, std::map<VertexId, long long>> matrix_;
  std::map<Face, Face> face_images_;
  std::map<Face, RatMatrix> class_pullbacks_;
};

// Transpose action on ambient coordinates: y_j = sum_i A[i][j] * x_i. A
// source point of face I lands on (a subface of) the image face of I.
RatVec map_point_ambient(const SkeletonMorphism& f, const RatVec& source_ambient);

// Image of a barycentric point: the carrying target face and the barycentric
// coordinates on it.
std::pair<Face, RatVec> map_point(const SkeletonMorphism& f, const Face& face,
                                  const RatVec& barycentric);

// Composition with the geometric map: value at source vertex i is
//   sum_j mult'(j) * A[i][j] * phi(j) / mult(i).
SimpleFunction pullback_function(const SkeletonMorphism& f, const SimpleFunction& phi);

// Pulls each target germ back along the map. The germ at source vertex i is
// the pullback of the target germ at the earliest vertex of the image face
// of {i}; the result is validated before it is returned.
MetrizedBundle pullback_bundle(const SkeletonMorphism& f, const MetrizedBundle& bundle);

// Pulls a curvature family back: restrict the class at a chosen vertex of
// the image face to that face, then apply the class pullback. The choice of
// vertex does not matter for curvature families of valid bundles.
std::map<VertexId, RatVec> pullback_curvature(const SkeletonMorphism& f,
                                              const std::map<VertexId, RatVec>& target_curv);

// Derivatives commute with pullback:
//   beta_I(d_{J(I)} phi) = d_I(pullback phi) for every source face I.
bool check_derivative_functoriality(const SkeletonMorphism& f, const SimpleFunction& phi);

// Curvature commutes with pullback:
//   pullback_curvature(curvature(B)) = curvature(pullback_bundle(B)).
bool check_curvature_functoriality(const SkeletonMorphism& f, const MetrizedBundle& bundle);

// Apply f first, then g. The composite of valid morphisms is valid; the
// result is revalidated.
SkeletonMorphism compose(const SkeletonMorphism& f, const SkeletonMorphism& g);

}  // namespace skel
