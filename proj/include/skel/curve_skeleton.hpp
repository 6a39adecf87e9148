#pragma once

#include "skel/metrized_bundle.hpp"

namespace skel {

// Oriented edge name: the endpoint earlier in the skeleton's vertex order
// comes first.
using EdgeKey = std::pair<VertexId, VertexId>;

// A connected finite simple graph with positive vertex multiplicities and a
// fixed total vertex order. Class data on the exported complex is generated,
// not user supplied: the space at a vertex i is one dimensional with the
// identity functional as test curve, the class of a neighbor j is 1, and the
// class of i itself is -(sum of neighbor mults) / mult(i); edges carry zero
// dimensional spaces.
class CurveSkeleton {
public:
  static CurveSkeleton build(std::vector<std::pair<VertexId, long long>> vertices,
                             std::vector<std::pair<VertexId, VertexId>> edges);

  const std::vector<VertexId>& vertex_order() const { return order_; }
  long long mult(VertexId v) const;
  bool precedes(VertexId a, VertexId b) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;  // sorted by id
  std::size_t valence(VertexId v) const { return neighbors(v).size(); }
  // Edges as (earlier, later) pairs, listed in order of their endpoints.
  const std::vector<EdgeKey>& edges() const { return edges_; }
  EdgeKey edge_key(VertexId a, VertexId b) const;

  const std::shared_ptr<const WeightedComplex>& complex() const { return complex_; }

private:
  CurveSkeleton() = default;

  std::vector<VertexId> order_;
  std::map<VertexId, std::size_t> positions_;
  std::map<VertexId, long long> mults_;
  std::map<VertexId, std::vector<VertexId>> neighbors_;
  std::vector<EdgeKey> edges_;
  std::shared_ptr<const WeightedComplex> complex_;
};

// One transition value pair per edge (j, k) with j before k: the pair holds
// the transition's values at j and at k.
struct Cocycle {
  std::map<EdgeKey, std::pair<Rat, Rat>> pairs;
};

void validate_cocycle(const CurveSkeleton& sk, const Cocycle& cocycle);

// One local potential per vertex, each defined at the vertex and its
// neighbors and constrained to have vanishing derivative there:
//   value(i) * (sum of neighbor mults) = sum over neighbors j of mult(j) * value(j).
struct LinGermFamily {
  std::map<VertexId, std::map<VertexId, Rat>> values;
};

void validate_lin_germ_family(const CurveSkeleton& sk, const LinGermFamily& family);

// Difference cocycle of a family: edge (j, k) carries
//   (phi_j(j) - phi_k(j), phi_j(k) - phi_k(k)).
Cocycle coboundary(const CurveSkeleton& sk, const LinGermFamily& family);

// Degree pairing: sum over edges (j, k) of mult(j) * mult(k) * (pair.second - pair.first).
Rat degree(const CurveSkeleton& sk, const Cocycle& cocycle);

// Degree of the bundle a cocycle presents. Coboundaries have degree zero, so
// this descends to cohomology classes; the value equals degree().
Rat bundle_degree(const CurveSkeleton& sk, const Cocycle& cocycle);

struct CechReport {
  std::size_t h1 = 0;          // corank of the coboundary map on edge data
  std::size_t kernel_dim = 0;  // global linear functions
  std::size_t rank = 0;
};

// Exact dimensions of the ordered difference complex on the skeleton cover.
CechReport h1_dimension(const CurveSkeleton& sk);

// Same graph under a new total order. Edge pairs whose endpoints swap sides
// become the reversed transition: (p, q) turns into (-q, -p).
std::pair<CurveSkeleton, Cocycle> reorder(const CurveSkeleton& sk, const Cocycle& cocycle,
                                          const std::vector<VertexId>& new_order);

// Transition data of a metrization: edge (j, k) carries
//   (phi_j(j) - phi_k(j), phi_j(k) - phi_k(k)).
Cocycle metrization_to_cocycle(const CurveSkeleton& sk, const MetrizedBundle& bundle);

// Total curvature weighted by multiplicities:
//   sum over vertices i of mult(i) * deg d_i phi_i,
// where deg d_i phi_i = -phi_i(i) * (sum of neighbor mults)
//                        + sum over neighbors j of mult(j) * phi_i(j).
// Equals bundle_degree(metrization_to_cocycle(...)).
Rat curvature_degree(const CurveSkeleton& sk, const MetrizedBundle& bundle);

}  // namespace skel
