#include "skel/complex.hpp"

#include "skel/errors.hpp"

#include <algorithm>
#include <sstream>

namespace skel {

Face make_face(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw Error(Errc::SchemaError, "face lists a vertex twice");
  return ids;
}

bool face_contains(const Face& f, VertexId v) {
  return std::binary_search(f.begin(), f.end(), v);
}

bool face_subset(const Face& inner, const Face& outer) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string face_to_string(const Face& f) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ',';
    os << f[i];
  }
  os << ']';
  return os.str();
}

RatVec NumClassSpace::class_of(VertexId v) const {
  auto it = divisor_classes.find(v);
  if (it != divisor_classes.end()) return it->second;
  return RatVec(dim);
}

bool NumClassSpace::is_nef(const RatVec& c) const {
  for (const RatVec& t : test_curves)
    if (dot(t, c) < 0) return false;
  return true;
}

bool NumClassSpace::is_ample(const RatVec& c) const {
  if (dim == 0) return true;
  for (const RatVec& t : test_curves)
    if (dot(t, c) <= 0) return false;
  return true;
}

namespace {

// Every nonempty subset of a face, the face itself excluded.
std::vector<Face> proper_subsets(const Face& f) {
  std::vector<Face> out;
  const std::size_t n = f.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    Face sub;
    for (std::size_t b = 0; b < n; ++b)
      if (mask & (std::size_t{1} << b)) sub.push_back(f[b]);
    out.push_back(std::move(sub));
  }
  return out;
}

}  // namespace

std::shared_ptr<const WeightedComplex> WeightedComplex::validate(ComplexData data) {
  // Vertices: unique ids, positive multiplicities, matching maps.
  std::map<VertexId, std::size_t> positions;
  for (std::size_t i = 0; i < data.vertex_order.size(); ++i) {
    if (!positions.emplace(data.vertex_order[i], i).second)
      throw Error(Errc::SchemaError,
                  "vertex id " + std::to_string(data.vertex_order[i]) + " listed twice");
  }
  if (positions.size() != data.multiplicities.size())
    throw Error(Errc::SchemaError, "multiplicity list does not match the vertex list");
  for (const auto& [v, m] : data.multiplicities) {
    if (!positions.count(v))
      throw Error(Errc::UnknownVertex, "multiplicity for unknown vertex " + std::to_string(v));
    if (m <= 0)
      throw Error(Errc::SchemaError,
                  "multiplicity of vertex " + std::to_string(v) + " must be positive");
  }

  // Faces: known vertices, all singletons, closure under nonempty subsets.
  for (const Face& f : data.faces) {
    if (f.empty()) throw Error(Errc::SchemaError, "empty face");
    if (!std::is_sorted(f.begin(), f.end()) ||
        std::adjacent_find(f.begin(), f.end()) != f.end())
      throw Error(Errc::SchemaError, "face " + face_to_string(f) + " is not a sorted set");
    for (VertexId v : f)
      if (!positions.count(v))
        throw Error(Errc::UnknownVertex,
                    "face " + face_to_string(f) + " uses unknown vertex " + std::to_string(v));
  }
  for (VertexId v : data.vertex_order)
    if (!data.faces.count(Face{v}))
      throw Error(Errc::MissingSingleton, "no singleton face for vertex " + std::to_string(v));
  for (const Face& f : data.faces)
    for (const Face& sub : proper_subsets(f))
      if (!data.faces.count(sub))
        throw Error(Errc::NotSubsetClosed, "face " + face_to_string(f) + " lacks subset " +
                                               face_to_string(sub));

  // Closed stars. Subset closure makes the pairwise test sufficient: u and v
  // share a face exactly when {u, v} is itself a face.
  std::map<VertexId, std::vector<VertexId>> stars;
  for (VertexId v : data.vertex_order) stars[v] = {v};
  for (const Face& f : data.faces)
    if (f.size() == 2) {
      stars[f[0]].push_back(f[1]);
      stars[f[1]].push_back(f[0]);
    }
  for (auto& [v, star] : stars) std::sort(star.begin(), star.end());

  // Class spaces: one per face, consistent shapes, classes only at adjacent
  // vertices, and the weighted special fiber relation.
  if (data.class_spaces.size() != data.faces.size())
    throw Error(Errc::SchemaError, "class space list does not match the face list");
  for (auto& [f, space] : data.class_spaces) {
    if (!data.faces.count(f))
      throw Error(Errc::UnknownFace, "class space for unknown face " + face_to_string(f));
    for (const RatVec& t : space.test_curves)
      if (t.size() != space.dim)
        throw Error(Errc::DimensionMismatch,
                    "test curve length mismatch on face " + face_to_string(f));
    for (auto it = space.divisor_classes.begin(); it != space.divisor_classes.end();) {
      const auto& [v, c] = *it;
      if (!positions.count(v))
        throw Error(Errc::UnknownVertex, "class for unknown vertex " + std::to_string(v) +
                                             " on face " + face_to_string(f));
      if (c.size() != space.dim)
        throw Error(Errc::DimensionMismatch, "class of vertex " + std::to_string(v) +
                                                 " on face " + face_to_string(f) +
                                                 " has wrong length");
      if (!data.faces.count(face_union(Face{v}, f))) {
        if (!is_zero(c))
          throw Error(Errc::NonAdjacentClassNonzero,
                      "vertex " + std::to_string(v) + " is not adjacent to face " +
                          face_to_string(f) + " but carries a nonzero class");
        it = space.divisor_classes.erase(it);  // normalize: drop stored zeros
      } else {
        ++it;
      }
    }
    RatVec sum(space.dim);
    for (const auto& [v, c] : space.divisor_classes)
      sum = add(sum, scale(Rat(data.multiplicities.at(v)), c));
    if (!is_zero(sum))
      throw Error(Errc::SpecialFiberRelationViolated,
                  "weighted class sum nonzero on face " + face_to_string(f));
  }

  // Restriction family: present and well shaped for every nested pair,
  // compatible with divisor classes, and closed under composition.
  for (const auto& [key, m] : data.restrictions) {
    const auto& [from, to] = key;
    if (!data.faces.count(from) || !data.faces.count(to))
      throw Error(Errc::UnknownFace, "restriction between unknown faces " +
                                         face_to_string(from) + " -> " + face_to_string(to));
    if (from == to || !face_subset(from, to))
      throw Error(Errc::SchemaError, "restriction key " + face_to_string(from) + " -> " +
                                         face_to_string(to) + " is not a proper nesting");
    if (m.rows() != data.class_spaces.at(to).dim || m.cols() != data.class_spaces.at(from).dim)
      throw Error(Errc::DimensionMismatch, "restriction " + face_to_string(from) + " -> " +
                                               face_to_string(to) + " has wrong shape");
  }
  for (const Face& big : data.faces) {
    for (const Face& small : proper_subsets(big)) {
      auto it = data.restrictions.find({small, big});
      if (it == data.restrictions.end())
        throw Error(Errc::RestrictionIncoherent, "missing restriction " +
                                                     face_to_string(small) + " -> " +
                                                     face_to_string(big));
      const RatMatrix& rho = it->second;
      const NumClassSpace& src = data.class_spaces.at(small);
      const NumClassSpace& dst = data.class_spaces.at(big);
      for (VertexId v : data.vertex_order) {
        if (multiply(rho, src.class_of(v)) != dst.class_of(v))
          throw Error(Errc::RestrictionIncoherent,
                      "restriction " + face_to_string(small) + " -> " + face_to_string(big) +
                          " moves the class of vertex " + std::to_string(v) + " wrongly");
      }
      (void)dst;
    }
  }
  for (const Face& big : data.faces) {
    const auto mids = proper_subsets(big);
    for (const Face& mid : mids) {
      for (const Face& small : proper_subsets(mid)) {
        const RatMatrix& lo = data.restrictions.at({small, mid});
        const RatMatrix& hi = data.restrictions.at({mid, big});
        const RatMatrix& direct = data.restrictions.at({small, big});
        if (multiply(hi, lo) != direct)
          throw Error(Errc::RestrictionIncoherent,
                      "composition " + face_to_string(small) + " -> " + face_to_string(mid) +
                          " -> " + face_to_string(big) + " disagrees with the direct map");
      }
    }
  }

  auto wc = std::shared_ptr<WeightedComplex>(new WeightedComplex());
  wc->data_ = std::move(data);
  wc->positions_ = std::move(positions);
  wc->stars_ = std::move(stars);
  return wc;
}

bool WeightedComplex::has_vertex(VertexId v) const { return positions_.count(v) != 0; }

long long WeightedComplex::mult(VertexId v) const {
  auto it = data_.multiplicities.find(v);
  if (it == data_.multiplicities.end())
    throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
  return it->second;
}

std::size_t WeightedComplex::position(VertexId v) const {
  auto it = positions_.find(v);
  if (it == positions_.end()) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
  return it->second;
}

bool WeightedComplex::has_face(const Face& f) const { return data_.faces.count(f) != 0; }

const NumClassSpace& WeightedComplex::space(const Face& f) const {
  auto it = data_.class_spaces.find(f);
  if (it == data_.class_spaces.end())
    throw Error(Errc::UnknownFace, "face " + face_to_string(f));
  return it->second;
}

RatMatrix WeightedComplex::restriction(const Face& from, const Face& to) const {
  if (from == to) return RatMatrix::identity(space(from).dim);
  auto it = data_.restrictions.find({from, to});
  if (it == data_.restrictions.end())
    throw Error(Errc::UnknownFace,
                "no restriction " + face_to_string(from) + " -> " + face_to_string(to));
  return it->second;
}

const std::vector<VertexId>& WeightedComplex::closed_star(VertexId v) const {
  auto it = stars_.find(v);
  if (it == stars_.end()) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
  return it->second;
}

RatVec WeightedComplex::vertex_embedding(VertexId v) const {
  RatVec x(vertex_count());
  x[position(v)] = make_rat(1, mult(v));
  return x;
}

void check_barycentric(const WeightedComplex& wc, const Face& f, const RatVec& barycentric) {
  if (!wc.has_face(f)) throw Error(Errc::UnknownFace, "face " + face_to_string(f));
  if (barycentric.size() != f.size())
    throw Error(Errc::DimensionMismatch,
                "barycentric length does not match face " + face_to_string(f));
  Rat sum = 0;
  for (const Rat& l : barycentric) {
    if (l < 0) throw Error(Errc::NegativeCoordinate, "negative barycentric coordinate");
    sum += l;
  }
  if (sum != 1)
    throw Error(Errc::NotOnFace, "barycentric coordinates on " + face_to_string(f) +
                                     " do not sum to one");
}

RatVec WeightedComplex::to_ambient(const Face& f, const RatVec& barycentric) const {
  check_barycentric(*this, f, barycentric);
  RatVec x(vertex_count());
  for (std::size_t i = 0; i < f.size(); ++i)
    x[position(f[i])] = barycentric[i] / mult(f[i]);
  return x;
}

RatVec WeightedComplex::to_barycentric(const Face& f, const RatVec& ambient) const {
  if (!has_face(f)) throw Error(Errc::UnknownFace, "face " + face_to_string(f));
  if (ambient.size() != vertex_count())
    throw Error(Errc::DimensionMismatch, "ambient point has wrong length");
  RatVec lambda(f.size());
  Rat sum = 0;
  for (std::size_t p = 0; p < ambient.size(); ++p) {
    const Rat& x = ambient[p];
    if (x == 0) continue;
    if (x < 0) throw Error(Errc::NegativeCoordinate, "negative ambient coordinate");
    const VertexId v = data_.vertex_order[p];
    if (!face_contains(f, v))
      throw Error(Errc::NotOnFace,
                  "point is supported outside face " + face_to_string(f));
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    lambda[i] = Rat(mult(f[i])) * ambient[position(f[i])];
    sum += lambda[i];
  }
  if (sum != 1)
    throw Error(Errc::NotOnFace,
                "point violates the weighted equation of face " + face_to_string(f));
  return lambda;
}

Face WeightedComplex::face_of_point(const RatVec& ambient) const {
  if (ambient.size() != vertex_count())
    throw Error(Errc::DimensionMismatch, "ambient point has wrong length");
  Face support;
  for (std::size_t p = 0; p < ambient.size(); ++p) {
    if (ambient[p] < 0) throw Error(Errc::NegativeCoordinate, "negative ambient coordinate");
    if (ambient[p] != 0) support.push_back(data_.vertex_order[p]);
  }
  std::sort(support.begin(), support.end());
  if (support.empty() || !has_face(support))
    throw Error(Errc::NotOnFace, "point support " + face_to_string(support) + " is not a face");
  (void)to_barycentric(support, ambient);  // enforces the weighted equation
  return support;
}

}  // namespace skel
