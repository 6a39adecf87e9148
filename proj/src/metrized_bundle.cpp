#include "skel/metrized_bundle.hpp"

#include "skel/errors.hpp"

#include <algorithm>

namespace skel {

Rat Germ::at(VertexId v) const {
  auto it = values.find(v);
  if (it == values.end())
    throw Error(Errc::StarSupportMismatch,
                "germ at " + std::to_string(base) + " has no value at " + std::to_string(v));
  return it->second;
}

RatVec germ_derivative(const WeightedComplex& wc, const Germ& germ, const Face& face) {
  if (!face_contains(face, germ.base))
    throw Error(Errc::UnknownFace, "face " + face_to_string(face) +
                                       " does not contain the germ base " +
                                       std::to_string(germ.base));
  const NumClassSpace& space = wc.space(face);
  RatVec out(space.dim);
  // Stored classes live only at vertices adjacent to the face; all of those
  // share a face with the base, hence lie in the germ's support.
  for (const auto& [v, c] : space.divisor_classes)
    out = add(out, scale(Rat(wc.mult(v)) * germ.at(v), c));
  return out;
}

const Germ& MetrizedBundle::germ(VertexId v) const {
  auto it = germs_.find(v);
  if (it == germs_.end())
    throw Error(Errc::UnknownVertex, "no germ at vertex " + std::to_string(v));
  return it->second;
}

MetrizedBundle validate_metrization(std::shared_ptr<const WeightedComplex> wc,
                                    std::map<VertexId, Germ> germs) {
  if (!wc) throw Error(Errc::SchemaError, "missing complex");
  if (germs.size() != wc->vertex_count())
    throw Error(Errc::StarSupportMismatch, "need exactly one germ per vertex");
  for (const auto& [v, germ] : germs) {
    if (!wc->has_vertex(v) || germ.base != v)
      throw Error(Errc::StarSupportMismatch,
                  "germ base " + std::to_string(germ.base) + " filed under vertex " +
                      std::to_string(v));
    const std::vector<VertexId>& star = wc->closed_star(v);
    if (germ.values.size() != star.size() ||
        !std::equal(star.begin(), star.end(), germ.values.begin(),
                    [](VertexId u, const auto& kv) { return u == kv.first; }))
      throw Error(Errc::StarSupportMismatch, "germ at " + std::to_string(v) +
                                                 " is not supported on its closed star");
  }
  for (const Face& face : wc->faces()) {
    for (VertexId i : face)
      for (VertexId j : face) {
        if (i >= j) continue;
        const RatVec di = germ_derivative(*wc, germs.at(i), face);
        const RatVec dj = germ_derivative(*wc, germs.at(j), face);
        if (di != dj)
          throw Error(Errc::IncompatibleGerms,
                      "germs at " + std::to_string(i) + " and " + std::to_string(j) +
                          " have different derivatives along " + face_to_string(face));
      }
  }
  MetrizedBundle bundle;
  bundle.complex_ = std::move(wc);
  bundle.germs_ = std::move(germs);
  return bundle;
}

std::map<VertexId, RatVec> curvature(const MetrizedBundle& bundle) {
  std::map<VertexId, RatVec> out;
  const WeightedComplex& wc = *bundle.complex();
  for (const auto& [v, germ] : bundle.germs())
    out.emplace(v, germ_derivative(wc, germ, Face{v}));
  return out;
}

bool compatibility_check(const MetrizedBundle& bundle) {
  const WeightedComplex& wc = *bundle.complex();
  const auto curv = curvature(bundle);
  for (const Face& face : wc.faces()) {
    if (face.size() < 2) continue;
    const RatVec first = multiply(wc.restriction(Face{face[0]}, face), curv.at(face[0]));
    for (std::size_t k = 1; k < face.size(); ++k) {
      const RatVec other = multiply(wc.restriction(Face{face[k]}, face), curv.at(face[k]));
      if (other != first) return false;
    }
  }
  return true;
}

bool is_kahler(const MetrizedBundle& bundle) {
  const WeightedComplex& wc = *bundle.complex();
  for (const Face& face : wc.faces()) {
    const NumClassSpace& space = wc.space(face);
    for (VertexId v : face)
      if (!space.is_ample(germ_derivative(wc, bundle.germ(v), face))) return false;
  }
  return true;
}

bool is_linear_germ(const WeightedComplex& wc, const Germ& germ) {
  for (const Face& face : wc.faces()) {
    if (!face_contains(face, germ.base)) continue;
    if (!is_zero(germ_derivative(wc, germ, face))) return false;
  }
  return true;
}

std::vector<Germ> linear_germ_basis(const WeightedComplex& wc, VertexId v) {
  const std::vector<VertexId>& star = wc.closed_star(v);
  std::map<VertexId, std::size_t> column;
  for (std::size_t i = 0; i < star.size(); ++i) column[star[i]] = i;

  // One block of rows per face containing v; unknowns are the star values.
  std::size_t rows = 0;
  for (const Face& face : wc.faces())
    if (face_contains(face, v)) rows += wc.space(face).dim;
  RatMatrix m(rows, star.size());
  std::size_t row = 0;
  for (const Face& face : wc.faces()) {
    if (!face_contains(face, v)) continue;
    const NumClassSpace& space = wc.space(face);
    for (const auto& [u, c] : space.divisor_classes)
      for (std::size_t r = 0; r < space.dim; ++r)
        m.at(row + r, column.at(u)) += Rat(wc.mult(u)) * c[r];
    row += space.dim;
  }

  std::vector<Germ> basis;
  for (const RatVec& x : nullspace_basis(m)) {
    Germ germ;
    germ.base = v;
    for (std::size_t i = 0; i < star.size(); ++i) germ.values[star[i]] = x[i];
    basis.push_back(std::move(germ));
  }
  return basis;
}

MetrizedBundle twist(const MetrizedBundle& bundle, VertexId v, const Germ& psi) {
  const WeightedComplex& wc = *bundle.complex();
  if (psi.base != v)
    throw Error(Errc::StarSupportMismatch, "twist germ based at " + std::to_string(psi.base) +
                                               " applied at vertex " + std::to_string(v));
  const std::vector<VertexId>& star = wc.closed_star(v);
  if (psi.values.size() != star.size() ||
      !std::equal(star.begin(), star.end(), psi.values.begin(),
                  [](VertexId u, const auto& kv) { return u == kv.first; }))
    throw Error(Errc::StarSupportMismatch, "twist germ is not supported on the closed star");
  if (!is_linear_germ(wc, psi))
    throw Error(Errc::NotLinearGerm, "twist germ at " + std::to_string(v) +
                                         " has a nonvanishing derivative");
  std::map<VertexId, Germ> germs = bundle.germs();
  for (auto& [u, val] : germs.at(v).values) val += psi.values.at(u);
  return validate_metrization(bundle.complex(), std::move(germs));
}

bool equal_up_to_twist(const MetrizedBundle& a, const MetrizedBundle& b) {
  if (a.complex() != b.complex()) return false;
  const WeightedComplex& wc = *a.complex();
  for (VertexId v : wc.vertex_order()) {
    Germ diff = a.germ(v);
    for (auto& [u, val] : diff.values) val -= b.germ(v).at(u);
    if (!is_linear_germ(wc, diff)) return false;
  }
  return true;
}

}  // namespace skel
