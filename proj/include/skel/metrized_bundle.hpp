#pragma once

#include "skel/simple_function.hpp"

namespace skel {

// Values of a local potential on the closed star of its base vertex.
struct Germ {
  VertexId base = 0;
  std::map<VertexId, Rat> values;
  Rat at(VertexId v) const;
};

// Derivative of a germ along a face inside the germ's star. The face must
// contain the base vertex, which guarantees every contributing vertex lies
// in the germ's support.
RatVec germ_derivative(const WeightedComplex& wc, const Germ& germ, const Face& face);

// A metrized line bundle presented by local potentials: one germ per vertex,
// agreeing up to linear functions on overlaps.
class MetrizedBundle {
public:
  const std::shared_ptr<const WeightedComplex>& complex() const { return complex_; }
  const std::map<VertexId, Germ>& germs() const { return germs_; }
  const Germ& germ(VertexId v) const;

private:
  friend MetrizedBundle validate_metrization(std::shared_ptr<const WeightedComplex>,
                                             std::map<VertexId, Germ>);
  MetrizedBundle() = default;

  std::shared_ptr<const WeightedComplex> complex_;
  std::map<VertexId, Germ> germs_;
};

// Checks: one germ per vertex based at it, supported exactly on its closed
// star, and with equal derivatives along every shared face:
//   d_I(phi_i - phi_j) = 0 for every face I and i, j in I.
MetrizedBundle validate_metrization(std::shared_ptr<const WeightedComplex> wc,
                                    std::map<VertexId, Germ> germs);

// Curvature classes: vertex v maps to the derivative of its own germ along
// the singleton face {v}.
std::map<VertexId, RatVec> curvature(const MetrizedBundle& bundle);

// Restates curvature compatibility through the restriction family: for every
// face I and all i, j in I the curvatures at i and j restrict to the same
// class on I. Holds for every valid metrization.
bool compatibility_check(const MetrizedBundle& bundle);

// Positivity: the derivative of the germ at v along every face containing v
// is ample in that face's class space.
bool is_kahler(const MetrizedBundle& bundle);

bool is_linear_germ(const WeightedComplex& wc, const Germ& germ);

// Basis of the germs at v with vanishing derivative along every face
// containing v, computed by exact elimination.
std::vector<Germ> linear_germ_basis(const WeightedComplex& wc, VertexId v);

// Replaces the germ at v by germ + psi. psi must be a linear germ at v, so
// the twist changes the presentation but not the curvature.
MetrizedBundle twist(const MetrizedBundle& bundle, VertexId v, const Germ& psi);

// Same bundle in different presentations: germ differences are linear
// everywhere.
bool equal_up_to_twist(const MetrizedBundle& a, const MetrizedBundle& b);

}  // namespace skel
