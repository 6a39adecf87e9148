#pragma once

#include "skel/linalg.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace skel {

using VertexId = int;

// A face is a nonempty set of vertex ids, stored sorted ascending. Faces are
// compared and keyed by this canonical representation.
using Face = std::vector<VertexId>;

// Sorts and rejects duplicates.
Face make_face(std::vector<VertexId> ids);
bool face_contains(const Face& f, VertexId v);
bool face_subset(const Face& inner, const Face& outer);
Face face_union(const Face& a, const Face& b);
std::string face_to_string(const Face& f);

// Numerical class data carried by one face: an abstract rational vector space
// together with one divisor class per nearby vertex and a user supplied list
// of test curve functionals. The functionals cut out the nef cone (all
// pairings nonnegative) and the ample cone (all pairings positive).
struct NumClassSpace {
  std::size_t dim = 0;
  std::map<VertexId, RatVec> divisor_classes;  // absent vertex = zero class
  std::vector<RatVec> test_curves;

  RatVec class_of(VertexId v) const;  // zero vector when absent
  bool is_nef(const RatVec& c) const;
  // Zero dimensional spaces count as ample by convention.
  bool is_ample(const RatVec& c) const;
};

// Raw input for a weighted dual complex, before validation.
struct ComplexData {
  // Listing order fixes the total order on vertices used by orientation
  // sensitive operations; it need not agree with the numeric id order.
  std::vector<VertexId> vertex_order;
  std::map<VertexId, long long> multiplicities;  // positive
  std::set<Face> faces;
  std::map<Face, NumClassSpace> class_spaces;
  // Key (I, J) with I a proper subset of J. The matrix maps classes on I to
  // classes on J and must be supplied for every nested pair of faces.
  std::map<std::pair<Face, Face>, RatMatrix> restrictions;
};

// An embedded weighted simplicial complex with multiplicities on vertices,
// a class space on every face, and a coherent family of restriction maps.
// Instances are immutable and only produced by validate().
class WeightedComplex {
public:
  // Checks, in order: vertex well-formedness, face well-formedness, presence
  // of all singletons, closure under nonempty subsets, class space shapes,
  // vanishing of classes at non adjacent vertices, the weighted relation
  //   sum_v mult(v) * c_{v,I} = 0 on every face I,
  // and coherence of the restriction family (composition along all nested
  // triples and compatibility with every divisor class).
  static std::shared_ptr<const WeightedComplex> validate(ComplexData data);

  const std::vector<VertexId>& vertex_order() const { return data_.vertex_order; }
  std::size_t vertex_count() const { return data_.vertex_order.size(); }
  bool has_vertex(VertexId v) const;
  long long mult(VertexId v) const;
  std::size_t position(VertexId v) const;
  const std::set<Face>& faces() const { return data_.faces; }
  bool has_face(const Face& f) const;
  const NumClassSpace& space(const Face& f) const;
  // Identity when from == to; otherwise the stored nested-pair map.
  RatMatrix restriction(const Face& from, const Face& to) const;
  const std::map<std::pair<Face, Face>, RatMatrix>& restriction_family() const {
    return data_.restrictions;
  }
  // Vertices sharing a face with v, including v itself, sorted by id.
  const std::vector<VertexId>& closed_star(VertexId v) const;

  // Canonical embedding: vertex v sits at e_v / mult(v), coordinates indexed
  // by vertex_order. A point of face I has nonnegative coordinates supported
  // on I with sum_i mult(i) * x_i = 1.
  RatVec vertex_embedding(VertexId v) const;
  RatVec to_ambient(const Face& f, const RatVec& barycentric) const;
  RatVec to_barycentric(const Face& f, const RatVec& ambient) const;
  // Minimal face containing an ambient point (its support). Errors when the
  // support is not a face or the point violates the face equations.
  Face face_of_point(const RatVec& ambient) const;

private:
  WeightedComplex() = default;

  ComplexData data_;
  std::map<VertexId, std::size_t> positions_;
  std::map<VertexId, std::vector<VertexId>> stars_;
};

void check_barycentric(const WeightedComplex& wc, const Face& f, const RatVec& barycentric);

}  // namespace skel
