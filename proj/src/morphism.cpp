#include "skel/morphism.hpp"

#include "skel/errors.hpp"

#include <algorithm>

namespace skel {

namespace {

Face image_support(const std::map<VertexId, std::map<VertexId, long long>>& matrix,
                   const Face& face) {
  std::set<VertexId> support;
  for (VertexId i : face) {
    auto row = matrix.find(i);
    if (row == matrix.end()) continue;
    for (const auto& [j, a] : row->second)
      if (a > 0) support.insert(j);
  }
  return Face(support.begin(), support.end());
}

}  // namespace

SkeletonMorphism SkeletonMorphism::validate(MorphismData data) {
  if (!data.source || !data.target) throw Error(Errc::SchemaError, "missing complex");
  const WeightedComplex& src = *data.source;
  const WeightedComplex& tgt = *data.target;

  for (const auto& [i, row] : data.matrix) {
    if (!src.has_vertex(i))
      throw Error(Errc::UnknownVertex, "matrix row for unknown source vertex " + std::to_string(i));
    for (const auto& [j, a] : row) {
      if (!tgt.has_vertex(j))
        throw Error(Errc::UnknownVertex,
                    "matrix entry for unknown target vertex " + std::to_string(j));
      if (a < 0)
        throw Error(Errc::SchemaError, "negative matrix entry at (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ")");
    }
  }

  // Degree relation per source vertex.
  for (VertexId i : src.vertex_order()) {
    long long acc = 0;
    auto row = data.matrix.find(i);
    if (row != data.matrix.end())
      for (const auto& [j, a] : row->second) acc += tgt.mult(j) * a;
    if (acc != src.mult(i))
      throw Error(Errc::DegreeRelationViolated,
                  "weighted row sum at source vertex " + std::to_string(i) + " is " +
                      std::to_string(acc) + ", expected " + std::to_string(src.mult(i)));
  }

  // Face images: declared, faces of the target, and exactly the support.
  for (const auto& [f, image] : data.face_images)
    if (!src.has_face(f))
      throw Error(Errc::UnknownFace, "image listed for unknown source face " + face_to_string(f));
  for (const Face& f : src.faces()) {
    auto it = data.face_images.find(f);
    if (it == data.face_images.end())
      throw Error(Errc::ImageNotAFace, "no image listed for source face " + face_to_string(f));
    const Face support = image_support(data.matrix, f);
    if (!tgt.has_face(support))
      throw Error(Errc::ImageNotAFace, "image support " + face_to_string(support) +
                                           " of face " + face_to_string(f) +
                                           " is not a target face");
    if (it->second != support)
      throw Error(Errc::ImageNotAFace, "declared image " + face_to_string(it->second) +
                                           " of face " + face_to_string(f) +
                                           " is not the minimal face " + face_to_string(support));
  }

  // Class coherence: beta_I(c'_{j,J(I)}) = sum_i A[i][j] c_{i,I}.
  for (const Face& f : src.faces()) {
    const Face& image = data.face_images.at(f);
    auto bit = data.class_pullbacks.find(f);
    if (bit == data.class_pullbacks.end())
      throw Error(Errc::ClassIncoherent, "no class pullback for source face " + face_to_string(f));
    const RatMatrix& beta = bit->second;
    if (beta.rows() != src.space(f).dim || beta.cols() != tgt.space(image).dim)
      throw Error(Errc::DimensionMismatch,
                  "class pullback on face " + face_to_string(f) + " has wrong shape");
    for (VertexId j : tgt.vertex_order()) {
      RatVec expected(src.space(f).dim);
      for (const auto& [i, row] : data.matrix) {
        auto a = row.find(j);
        if (a == row.end() || a->second == 0) continue;
        expected = add(expected, scale(Rat(a->second), src.space(f).class_of(i)));
      }
      if (multiply(beta, tgt.space(image).class_of(j)) != expected)
        throw Error(Errc::ClassIncoherent,
                    "pullback of the class of target vertex " + std::to_string(j) +
                        " disagrees on face " + face_to_string(f));
    }
  }
  for (const auto& [f, beta] : data.class_pullbacks) {
    (void)beta;
    if (!src.has_face(f))
      throw Error(Errc::UnknownFace,
                  "class pullback for unknown source face " + face_to_string(f));
  }

  // Naturality against both restriction families.
  for (const Face& big : src.faces()) {
    for (const Face& small : src.faces()) {
      if (small == big || !face_subset(small, big)) continue;
      const Face& j_small = data.face_images.at(small);
      const Face& j_big = data.face_images.at(big);
      const RatMatrix lhs = multiply(src.restriction(small, big), data.class_pullbacks.at(small));
      const RatMatrix rhs = multiply(data.class_pullbacks.at(big), tgt.restriction(j_small, j_big));
      if (lhs != rhs)
        throw Error(Errc::NaturalityViolated,
                    "restriction and pullback disagree on " + face_to_string(small) + " inside " +
                        face_to_string(big));
    }
  }

  SkeletonMorphism out;
  out.source_ = std::move(data.source);
  out.target_ = std::move(data.target);
  out.matrix_ = std::move(data.matrix);
  out.face_images_ = std::move(data.face_images);
  out.class_pullbacks_ = std::move(data.class_pullbacks);
  return out;
}

long long SkeletonMorphism::entry(VertexId src, VertexId tgt) const {
  auto row = matrix_.find(src);
  if (row == matrix_.end()) return 0;
  auto it = row->second.find(tgt);
  return it == row->second.end() ? 0 : it->second;
}

const Face& SkeletonMorphism::face_image(const Face& f) const {
  auto it = face_images_.find(f);
  if (it == face_images_.end())
    throw Error(Errc::UnknownFace, "face " + face_to_string(f));
  return it->second;
}

const RatMatrix& SkeletonMorphism::class_pullback(const Face& f) const {
  auto it = class_pullbacks_.find(f);
  if (it == class_pullbacks_.end())
    throw Error(Errc::UnknownFace, "face " + face_to_string(f));
  return it->second;
}

RatVec map_point_ambient(const SkeletonMorphism& f, const RatVec& source_ambient) {
  const WeightedComplex& src = *f.source();
  const WeightedComplex& tgt = *f.target();
  if (source_ambient.size() != src.vertex_count())
    throw Error(Errc::DimensionMismatch, "ambient point has wrong length");
  RatVec out(tgt.vertex_count());
  for (VertexId i : src.vertex_order()) {
    const Rat& x = source_ambient[src.position(i)];
    if (x == 0) continue;
    for (VertexId j : tgt.vertex_order()) {
      const long long a = f.entry(i, j);
      if (a != 0) out[tgt.position(j)] += Rat(a) * x;
    }
  }
  return out;
}

std::pair<Face, RatVec> map_point(const SkeletonMorphism& f, const Face& face,
                                  const RatVec& barycentric) {
  const RatVec ambient = f.source()->to_ambient(face, barycentric);
  const RatVec image = map_point_ambient(f, ambient);
  const Face carrier = f.target()->face_of_point(image);
  return {carrier, f.target()->to_barycentric(carrier, image)};
}

SimpleFunction pullback_function(const SkeletonMorphism& f, const SimpleFunction& phi) {
  const WeightedComplex& src = *f.source();
  const WeightedComplex& tgt = *f.target();
  std::map<VertexId, Rat> values;
  for (VertexId i : src.vertex_order()) {
    Rat acc = 0;
    for (VertexId j : tgt.vertex_order()) {
      const long long a = f.entry(i, j);
      if (a != 0) acc += Rat(tgt.mult(j)) * Rat(a) * phi.at(j);
    }
    values[i] = acc / Rat(src.mult(i));
  }
  return make_simple_function(src, std::move(values));
}

namespace {

// Earliest vertex of the image face of {i}, in the target's vertex order.
VertexId image_anchor(const SkeletonMorphism& f, VertexId i) {
  const Face& image = f.face_image(Face{i});
  return *std::min_element(image.begin(), image.end(), [&f](VertexId a, VertexId b) {
    return f.target()->position(a) < f.target()->position(b);
  });
}

}  // namespace

MetrizedBundle pullback_bundle(const SkeletonMorphism& f, const MetrizedBundle& bundle) {
  if (bundle.complex() != f.target())
    throw Error(Errc::StarSupportMismatch, "bundle does not live on the morphism target");
  const WeightedComplex& src = *f.source();
  const WeightedComplex& tgt = *f.target();

  std::map<VertexId, Germ> germs;
  for (VertexId i : src.vertex_order()) {
    const Germ& anchor_germ = bundle.germ(image_anchor(f, i));
    Germ germ;
    germ.base = i;
    for (VertexId v : src.closed_star(i)) {
      // Value of the anchor potential at the image of v. Every image vertex
      // shares the face image of {i, v} with the anchor, so the potential is
      // defined there.
      Rat acc = 0;
      for (VertexId j : tgt.vertex_order()) {
        const long long a = f.entry(v, j);
        if (a == 0) continue;
        auto it = anchor_germ.values.find(j);
        if (it == anchor_germ.values.end())
          throw Error(Errc::ImageGermUndefined,
                      "image of vertex " + std::to_string(v) +
                          " leaves the star of the anchor of " + std::to_string(i));
        acc += Rat(tgt.mult(j)) * Rat(a) * it->second;
      }
      germ.values[v] = acc / Rat(src.mult(v));
    }
    germs.emplace(i, std::move(germ));
  }
  return validate_metrization(f.source(), std::move(germs));
}

std::map<VertexId, RatVec> pullback_curvature(const SkeletonMorphism& f,
                                              const std::map<VertexId, RatVec>& target_curv) {
  const WeightedComplex& tgt = *f.target();
  std::map<VertexId, RatVec> out;
  for (VertexId i : f.source()->vertex_order()) {
    const Face& image = f.face_image(Face{i});
    const VertexId anchor = image_anchor(f, i);
    auto it = target_curv.find(anchor);
    if (it == target_curv.end())
      throw Error(Errc::UnknownVertex,
                  "curvature family misses target vertex " + std::to_string(anchor));
    const RatVec restricted = multiply(tgt.restriction(Face{anchor}, image), it->second);
    out.emplace(i, multiply(f.class_pullback(Face{i}), restricted));
  }
  return out;
}

bool check_derivative_functoriality(const SkeletonMorphism& f, const SimpleFunction& phi) {
  const SimpleFunction pulled = pullback_function(f, phi);
  for (const Face& face : f.source()->faces()) {
    const RatVec lhs = multiply(f.class_pullback(face),
                             derivative(*f.target(), phi, f.face_image(face)));
    const RatVec rhs = derivative(*f.source(), pulled, face);
    if (lhs != rhs) return false;
  }
  return true;
}

bool check_curvature_functoriality(const SkeletonMorphism& f, const MetrizedBundle& bundle) {
  const auto direct = pullback_curvature(f, curvature(bundle));
  const auto through_bundle = curvature(pullback_bundle(f, bundle));
  return direct == through_bundle;
}

SkeletonMorphism compose(const SkeletonMorphism& f, const SkeletonMorphism& g) {
  if (f.target() != g.source())
    throw Error(Errc::SchemaError, "composite needs matching middle complexes");
  MorphismData data;
  data.source = f.source();
  data.target = g.target();
  for (VertexId i : f.source()->vertex_order()) {
    for (VertexId k : g.target()->vertex_order()) {
      long long acc = 0;
      for (VertexId j : f.target()->vertex_order()) acc += f.entry(i, j) * g.entry(j, k);
      if (acc != 0) data.matrix[i][k] = acc;
    }
  }
  for (const Face& face : f.source()->faces()) {
    const Face& mid = f.face_image(face);
    data.face_images.emplace(face, g.face_image(mid));
    data.class_pullbacks.emplace(face,
                                 multiply(f.class_pullback(face), g.class_pullback(mid)));
  }
  return SkeletonMorphism::validate(std::move(data));
}

}  // namespace skel
