#include "skel/simple_function.hpp"

#include "skel/errors.hpp"

namespace skel {

Rat SimpleFunction::at(VertexId v) const {
  auto it = values.find(v);
  if (it == values.end())
    throw Error(Errc::UnknownVertex, "no value at vertex " + std::to_string(v));
  return it->second;
}

SimpleFunction make_simple_function(const WeightedComplex& wc, std::map<VertexId, Rat> values) {
  for (const auto& [v, val] : values) {
    (void)val;
    if (!wc.has_vertex(v))
      throw Error(Errc::UnknownVertex, "value at unknown vertex " + std::to_string(v));
  }
  if (values.size() != wc.vertex_count())
    throw Error(Errc::UnknownVertex, "function must assign a value to every vertex");
  return SimpleFunction{std::move(values)};
}

SimpleFunction divisor_to_simple_function(const WeightedComplex& wc,
                                          const std::map<VertexId, Rat>& coefficients) {
  std::map<VertexId, Rat> values;
  for (const auto& [v, a] : coefficients) {
    if (!wc.has_vertex(v))
      throw Error(Errc::UnknownVertex, "coefficient at unknown vertex " + std::to_string(v));
    values[v] = a / Rat(wc.mult(v));
  }
  for (VertexId v : wc.vertex_order()) values.try_emplace(v, 0);
  return SimpleFunction{std::move(values)};
}

Rat evaluate(const WeightedComplex& wc, const SimpleFunction& f, const Face& face,
             const RatVec& barycentric) {
  check_barycentric(wc, face, barycentric);
  Rat out = 0;
  for (std::size_t i = 0; i < face.size(); ++i) out += barycentric[i] * f.at(face[i]);
  return out;
}

Rat evaluate_at_ambient(const WeightedComplex& wc, const SimpleFunction& f,
                        const RatVec& ambient) {
  const Face face = wc.face_of_point(ambient);
  return evaluate(wc, f, face, wc.to_barycentric(face, ambient));
}

RatVec derivative(const WeightedComplex& wc, const SimpleFunction& f, const Face& face) {
  const NumClassSpace& space = wc.space(face);
  RatVec out(space.dim);
  for (const auto& [v, c] : space.divisor_classes)
    out = add(out, scale(Rat(wc.mult(v)) * f.at(v), c));
  return out;
}

std::vector<Face> FaceClassification::linear_faces() const {
  std::vector<Face> out;
  for (const auto& [face, fl] : flags)
    if (fl.linear) out.push_back(face);
  return out;
}

std::vector<Face> FaceClassification::convex_faces() const {
  std::vector<Face> out;
  for (const auto& [face, fl] : flags)
    if (fl.convex) out.push_back(face);
  return out;
}

std::vector<Face> FaceClassification::strictly_convex_faces() const {
  std::vector<Face> out;
  for (const auto& [face, fl] : flags)
    if (fl.strictly_convex) out.push_back(face);
  return out;
}

FaceClassification classify_faces(const WeightedComplex& wc, const SimpleFunction& f) {
  FaceClassification out;
  for (const Face& face : wc.faces()) {
    const NumClassSpace& space = wc.space(face);
    const RatVec d = derivative(wc, f, face);
    FaceFlags fl;
    fl.linear = is_zero(d);
    fl.convex = space.is_nef(d);
    fl.strictly_convex = space.is_ample(d);
    out.flags.emplace(face, fl);
  }
  return out;
}

bool is_on_subset(const FaceClassification& classification, FaceProperty property,
                  const std::vector<Face>& faces) {
  for (const Face& face : faces) {
    auto it = classification.flags.find(face);
    if (it == classification.flags.end())
      throw Error(Errc::UnknownFace, "face " + face_to_string(face));
    const FaceFlags& fl = it->second;
    const bool ok = property == FaceProperty::Linear    ? fl.linear
                    : property == FaceProperty::Convex  ? fl.convex
                                                        : fl.strictly_convex;
    if (!ok) return false;
  }
  return true;
}

}  // namespace skel
