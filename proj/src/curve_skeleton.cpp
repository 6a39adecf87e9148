#include "skel/curve_skeleton.hpp"

#include "skel/errors.hpp"

#include <algorithm>
#include <numeric>

namespace skel {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

CurveSkeleton CurveSkeleton::build(std::vector<std::pair<VertexId, long long>> vertices,
                                   std::vector<std::pair<VertexId, VertexId>> edges) {
  if (vertices.empty()) throw Error(Errc::Empty, "skeleton needs at least one vertex");

  CurveSkeleton sk;
  for (const auto& [v, m] : vertices) {
    if (!sk.positions_.emplace(v, sk.order_.size()).second)
      throw Error(Errc::NotSimple, "vertex " + std::to_string(v) + " listed twice");
    if (m <= 0)
      throw Error(Errc::SchemaError,
                  "multiplicity of vertex " + std::to_string(v) + " must be positive");
    sk.order_.push_back(v);
    sk.mults_[v] = m;
    sk.neighbors_[v] = {};
  }

  std::set<std::pair<VertexId, VertexId>> seen;
  for (auto [a, b] : edges) {
    if (!sk.positions_.count(a) || !sk.positions_.count(b))
      throw Error(Errc::UnknownVertex, "edge endpoint not a vertex");
    if (a == b) throw Error(Errc::NotSimple, "loop at vertex " + std::to_string(a));
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw Error(Errc::NotSimple, "repeated edge " + std::to_string(a) + "-" + std::to_string(b));
    sk.neighbors_[a].push_back(b);
    sk.neighbors_[b].push_back(a);
  }
  for (auto& [v, nb] : sk.neighbors_) std::sort(nb.begin(), nb.end());

  UnionFind uf(sk.order_.size());
  for (const auto& [a, b] : seen) uf.unite(sk.positions_.at(a), sk.positions_.at(b));
  for (std::size_t i = 0; i < sk.order_.size(); ++i)
    if (uf.find(i) != uf.find(0)) throw Error(Errc::Disconnected, "skeleton is not connected");

  for (const auto& [a, b] : seen) sk.edges_.push_back(sk.edge_key(a, b));
  std::sort(sk.edges_.begin(), sk.edges_.end(), [&sk](const EdgeKey& x, const EdgeKey& y) {
    return std::pair(sk.positions_.at(x.first), sk.positions_.at(x.second)) <
           std::pair(sk.positions_.at(y.first), sk.positions_.at(y.second));
  });

  // Export the complex: singletons and edges, generated class data.
  ComplexData data;
  data.vertex_order = sk.order_;
  data.multiplicities = sk.mults_;
  for (VertexId v : sk.order_) {
    data.faces.insert(Face{v});
    NumClassSpace space;
    space.dim = 1;
    Rat neighbor_weight = 0;
    for (VertexId u : sk.neighbors_.at(v)) {
      space.divisor_classes[u] = {Rat(1)};
      neighbor_weight += sk.mults_.at(u);
    }
    space.divisor_classes[v] = {-neighbor_weight / Rat(sk.mults_.at(v))};
    space.test_curves = {{Rat(1)}};
    data.class_spaces.emplace(Face{v}, std::move(space));
  }
  for (const EdgeKey& e : sk.edges_) {
    const Face face = make_face({e.first, e.second});
    data.faces.insert(face);
    NumClassSpace space;
    space.dim = 0;
    data.class_spaces.emplace(face, std::move(space));
    data.restrictions.emplace(std::pair(Face{face[0]}, face), RatMatrix(0, 1));
    data.restrictions.emplace(std::pair(Face{face[1]}, face), RatMatrix(0, 1));
  }
  sk.complex_ = WeightedComplex::validate(std::move(data));
  return sk;
}

long long CurveSkeleton::mult(VertexId v) const {
  auto it = mults_.find(v);
  if (it == mults_.end()) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
  return it->second;
}

bool CurveSkeleton::precedes(VertexId a, VertexId b) const {
  auto ia = positions_.find(a), ib = positions_.find(b);
  if (ia == positions_.end() || ib == positions_.end())
    throw Error(Errc::UnknownVertex, "vertex outside skeleton");
  return ia->second < ib->second;
}

const std::vector<VertexId>& CurveSkeleton::neighbors(VertexId v) const {
  auto it = neighbors_.find(v);
  if (it == neighbors_.end()) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
  return it->second;
}

EdgeKey CurveSkeleton::edge_key(VertexId a, VertexId b) const {
  if (a == b || !std::binary_search(neighbors(a).begin(), neighbors(a).end(), b))
    throw Error(Errc::UnknownFace,
                "no edge " + std::to_string(a) + "-" + std::to_string(b));
  return precedes(a, b) ? EdgeKey{a, b} : EdgeKey{b, a};
}

void validate_cocycle(const CurveSkeleton& sk, const Cocycle& cocycle) {
  if (cocycle.pairs.size() != sk.edges().size())
    throw Error(Errc::UnknownFace, "cocycle must assign one pair to every edge");
  for (const auto& [key, pair] : cocycle.pairs) {
    (void)pair;
    if (sk.edge_key(key.first, key.second) != key)
      throw Error(Errc::UnknownFace, "cocycle edge " + std::to_string(key.first) + "-" +
                                         std::to_string(key.second) +
                                         " is not oriented by the vertex order");
  }
}

void validate_lin_germ_family(const CurveSkeleton& sk, const LinGermFamily& family) {
  if (family.values.size() != sk.vertex_order().size())
    throw Error(Errc::StarSupportMismatch, "family needs one germ per vertex");
  for (const auto& [v, vals] : family.values) {
    const std::vector<VertexId>& nb = sk.neighbors(v);
    if (vals.size() != nb.size() + 1 || !vals.count(v))
      throw Error(Errc::StarSupportMismatch,
                  "germ at " + std::to_string(v) + " must cover the vertex and its neighbors");
    Rat weighted = 0;
    Rat weight = 0;
    for (VertexId u : nb) {
      auto it = vals.find(u);
      if (it == vals.end())
        throw Error(Errc::StarSupportMismatch,
                    "germ at " + std::to_string(v) + " misses neighbor " + std::to_string(u));
      weighted += Rat(sk.mult(u)) * it->second;
      weight += sk.mult(u);
    }
    if (vals.at(v) * weight != weighted)
      throw Error(Errc::NotLinearGerm,
                  "germ at " + std::to_string(v) + " violates the balance equation");
  }
}

Cocycle coboundary(const CurveSkeleton& sk, const LinGermFamily& family) {
  validate_lin_germ_family(sk, family);
  Cocycle out;
  for (const EdgeKey& e : sk.edges()) {
    const auto& phi_j = family.values.at(e.first);
    const auto& phi_k = family.values.at(e.second);
    out.pairs[e] = {phi_j.at(e.first) - phi_k.at(e.first),
                    phi_j.at(e.second) - phi_k.at(e.second)};
  }
  return out;
}

Rat degree(const CurveSkeleton& sk, const Cocycle& cocycle) {
  validate_cocycle(sk, cocycle);
  Rat out = 0;
  for (const auto& [e, pair] : cocycle.pairs)
    out += Rat(sk.mult(e.first)) * Rat(sk.mult(e.second)) * (pair.second - pair.first);
  return out;
}

Rat bundle_degree(const CurveSkeleton& sk, const Cocycle& cocycle) {
  return degree(sk, cocycle);
}

CechReport h1_dimension(const CurveSkeleton& sk) {
  const auto& edges = sk.edges();
  std::map<VertexId, std::size_t> col_base;
  std::size_t cols = 0;

  // Basis of the germs at v with vanishing derivative: one germ per neighbor
  // (neighbor value 1, others 0, own value solved from the balance equation),
  // or the constant germ when v is isolated.
  std::map<VertexId, std::vector<std::map<VertexId, Rat>>> bases;
  for (VertexId v : sk.vertex_order()) {
    const auto& nb = sk.neighbors(v);
    std::vector<std::map<VertexId, Rat>> basis;
    if (nb.empty()) {
      basis.push_back({{v, Rat(1)}});
    } else {
      Rat weight = 0;
      for (VertexId u : nb) weight += sk.mult(u);
      for (VertexId u : nb) {
        std::map<VertexId, Rat> germ;
        for (VertexId w : nb) germ[w] = (w == u) ? Rat(1) : Rat(0);
        germ[v] = Rat(sk.mult(u)) / weight;
        basis.push_back(std::move(germ));
      }
    }
    col_base[v] = cols;
    cols += basis.size();
    bases[v] = std::move(basis);
  }

  RatMatrix m(2 * edges.size(), cols);
  for (std::size_t ei = 0; ei < edges.size(); ++ei) {
    const auto& [j, k] = edges[ei];
    const auto& basis_j = bases.at(j);
    for (std::size_t b = 0; b < basis_j.size(); ++b) {
      m.at(2 * ei, col_base.at(j) + b) += basis_j[b].at(j);
      m.at(2 * ei + 1, col_base.at(j) + b) += basis_j[b].at(k);
    }
    const auto& basis_k = bases.at(k);
    for (std::size_t b = 0; b < basis_k.size(); ++b) {
      m.at(2 * ei, col_base.at(k) + b) -= basis_k[b].at(j);
      m.at(2 * ei + 1, col_base.at(k) + b) -= basis_k[b].at(k);
    }
  }

  CechReport report;
  report.rank = exact_rank(m);
  report.h1 = 2 * edges.size() - report.rank;
  report.kernel_dim = cols - report.rank;
  return report;
}

std::pair<CurveSkeleton, Cocycle> reorder(const CurveSkeleton& sk, const Cocycle& cocycle,
                                          const std::vector<VertexId>& new_order) {
  validate_cocycle(sk, cocycle);
  std::set<VertexId> seen(new_order.begin(), new_order.end());
  if (new_order.size() != sk.vertex_order().size() || seen.size() != new_order.size())
    throw Error(Errc::NotAPermutation, "new order must list every vertex exactly once");
  for (VertexId v : sk.vertex_order())
    if (!seen.count(v))
      throw Error(Errc::NotAPermutation, "new order misses vertex " + std::to_string(v));

  std::vector<std::pair<VertexId, long long>> vertices;
  for (VertexId v : new_order) vertices.emplace_back(v, sk.mult(v));
  std::vector<std::pair<VertexId, VertexId>> edges(sk.edges().begin(), sk.edges().end());
  CurveSkeleton out = CurveSkeleton::build(std::move(vertices), std::move(edges));

  Cocycle moved;
  for (const auto& [e, pair] : cocycle.pairs) {
    if (out.precedes(e.first, e.second)) {
      moved.pairs[e] = pair;
    } else {
      // Reversed orientation carries the inverse transition.
      moved.pairs[{e.second, e.first}] = {-pair.second, -pair.first};
    }
  }
  return {std::move(out), std::move(moved)};
}

Cocycle metrization_to_cocycle(const CurveSkeleton& sk, const MetrizedBundle& bundle) {
  if (bundle.complex() != sk.complex())
    throw Error(Errc::StarSupportMismatch, "bundle does not live on this skeleton");
  Cocycle out;
  for (const EdgeKey& e : sk.edges()) {
    const Germ& phi_j = bundle.germ(e.first);
    const Germ& phi_k = bundle.germ(e.second);
    out.pairs[e] = {phi_j.at(e.first) - phi_k.at(e.first),
                    phi_j.at(e.second) - phi_k.at(e.second)};
  }
  return out;
}

Rat curvature_degree(const CurveSkeleton& sk, const MetrizedBundle& bundle) {
  if (bundle.complex() != sk.complex())
    throw Error(Errc::StarSupportMismatch, "bundle does not live on this skeleton");
  // Vertex spaces are one dimensional with the identity functional, so the
  // degree of a curvature class is its single coordinate.
  const auto curv = curvature(bundle);
  Rat out = 0;
  for (VertexId v : sk.vertex_order()) out += Rat(sk.mult(v)) * curv.at(v)[0];
  return out;
}

}  // namespace skel
