#include "skel/complex.hpp"

#include "checking.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "skel/curve_skeleton.hpp"

using namespace skel;
using testgen::fails_with;

TEST_CASE("face helpers") {
  CHECK(make_face({3, 1, 2}) == Face{1, 2, 3});
  CHECK(fails_with(Errc::SchemaError, [] { make_face({1, 1}); }));
  CHECK(face_contains(Face{1, 3}, 3));
  CHECK_FALSE(face_contains(Face{1, 3}, 2));
  CHECK(face_subset(Face{2}, Face{1, 2}));
  CHECK_FALSE(face_subset(Face{1, 2}, Face{2}));
  CHECK(face_union(Face{1, 3}, Face{2, 3}) == Face{1, 2, 3});
  CHECK(face_to_string(Face{1, 2}) == "[1,2]");
}

TEST_CASE("generated classes on a two vertex skeleton with multiplicities 2, 3") {
  const CurveSkeleton sk = CurveSkeleton::build({{1, 2}, {2, 3}}, {{1, 2}});
  const WeightedComplex& wc = *sk.complex();

  CHECK(wc.vertex_order() == std::vector<VertexId>{1, 2});
  CHECK(wc.mult(1) == 2);
  CHECK(wc.mult(2) == 3);

  const NumClassSpace& at_one = wc.space(Face{1});
  CHECK(at_one.dim == 1);
  CHECK(at_one.class_of(1) == RatVec{make_rat(-3, 2)});
  CHECK(at_one.class_of(2) == RatVec{1});

  const NumClassSpace& at_two = wc.space(Face{2});
  CHECK(at_two.class_of(2) == RatVec{make_rat(-2, 3)});
  CHECK(at_two.class_of(1) == RatVec{1});

  CHECK(wc.space(Face{1, 2}).dim == 0);
  CHECK(wc.closed_star(1) == std::vector<VertexId>{1, 2});
}

TEST_CASE("embedding and barycentric coordinates") {
  const CurveSkeleton sk = CurveSkeleton::build({{1, 2}, {2, 3}}, {{1, 2}});
  const WeightedComplex& wc = *sk.complex();
  const Face edge{1, 2};

  CHECK(wc.vertex_embedding(1) == RatVec{make_rat(1, 2), 0});

  const RatVec midpoint{make_rat(1, 2), make_rat(1, 2)};
  const RatVec ambient = wc.to_ambient(edge, midpoint);
  CHECK(ambient == RatVec{make_rat(1, 4), make_rat(1, 6)});
  CHECK(wc.to_barycentric(edge, ambient) == midpoint);
  CHECK(wc.face_of_point(ambient) == edge);
  CHECK(wc.face_of_point(RatVec{make_rat(1, 2), 0}) == Face{1});

  CHECK(fails_with(Errc::NegativeCoordinate,
                   [&] { check_barycentric(wc, edge, RatVec{make_rat(3, 2), make_rat(-1, 2)}); }));
  CHECK(fails_with(Errc::NotOnFace,
                   [&] { check_barycentric(wc, edge, RatVec{make_rat(1, 2), make_rat(1, 3)}); }));
  CHECK(fails_with(Errc::DimensionMismatch,
                   [&] { wc.to_ambient(edge, RatVec{1}); }));
  CHECK(fails_with(Errc::UnknownVertex, [&] { wc.mult(9); }));
  CHECK(fails_with(Errc::UnknownFace, [&] { wc.space(Face{9}); }));
  // Support {1, 2} with the edge equation violated.
  CHECK(fails_with(Errc::NotOnFace,
                   [&] { wc.face_of_point(RatVec{make_rat(1, 2), make_rat(1, 6)}); }));
}

TEST_CASE("validate accepts the edge space fixture") {
  const auto wc = WeightedComplex::validate(testgen::two_vertex_edge_space_data());
  CHECK(wc->space(Face{1, 2}).dim == 1);
  CHECK(wc->restriction(Face{1}, Face{1, 2}).at(0, 0) == Rat(-1));
  CHECK(wc->restriction(Face{1}, Face{1}) == RatMatrix::identity(1));
}

TEST_CASE("validate rejects structural defects with specific codes") {
  CHECK(fails_with(Errc::MissingSingleton, [] {
    ComplexData d = testgen::two_vertex_edge_space_data();
    d.faces.erase(Face{2});
    d.class_spaces.erase(Face{2});
    d.restrictions.erase({Face{2}, Face{1, 2}});
    WeightedComplex::validate(std::move(d));
  }));

  CHECK(fails_with(Errc::NotSubsetClosed, [] {
    ComplexData d;
    d.vertex_order = {1, 2, 3};
    d.multiplicities = {{1, 1}, {2, 1}, {3, 1}};
    d.faces = {Face{1}, Face{2}, Face{3}, Face{1, 2, 3}};
    WeightedComplex::validate(std::move(d));
  }));

  CHECK(fails_with(Errc::SpecialFiberRelationViolated, [] {
    ComplexData d = testgen::two_vertex_edge_space_data();
    d.class_spaces[Face{1}].divisor_classes[2] = {2};
    WeightedComplex::validate(std::move(d));
  }));

  CHECK(fails_with(Errc::NonAdjacentClassNonzero, [] {
    ComplexData d = testgen::two_vertex_edge_space_data();
    d.vertex_order.push_back(3);
    d.multiplicities[3] = 1;
    d.faces.insert(Face{3});
    d.class_spaces[Face{3}] = NumClassSpace{};
    d.class_spaces[Face{1}].divisor_classes[3] = {5};
    WeightedComplex::validate(std::move(d));
  }));

  CHECK(fails_with(Errc::RestrictionIncoherent, [] {
    ComplexData d = testgen::two_vertex_edge_space_data();
    d.restrictions[{Face{1}, Face{1, 2}}] = RatMatrix::identity(1);
    WeightedComplex::validate(std::move(d));
  }));

  CHECK(fails_with(Errc::RestrictionIncoherent, [] {
    ComplexData d = testgen::two_vertex_edge_space_data();
    d.restrictions.erase({Face{2}, Face{1, 2}});
    WeightedComplex::validate(std::move(d));
  }));

  CHECK(fails_with(Errc::DimensionMismatch, [] {
    ComplexData d = testgen::two_vertex_edge_space_data();
    d.restrictions[{Face{1}, Face{1, 2}}] = RatMatrix(2, 1);
    WeightedComplex::validate(std::move(d));
  }));

  CHECK(fails_with(Errc::SchemaError, [] {
    ComplexData d = testgen::two_vertex_edge_space_data();
    d.multiplicities[1] = 0;
    WeightedComplex::validate(std::move(d));
  }));
}

TEST_CASE("random general complexes validate and embed coherently") {
  testgen::Rng rng(2026);
  for (int round = 0; round < 25; ++round) {
    const auto wc = testgen::random_general_complex(rng);
    for (VertexId v : wc->vertex_order()) {
      const RatVec ambient = wc->vertex_embedding(v);
      CHECK(wc->face_of_point(ambient) == Face{v});
      CHECK(wc->to_barycentric(Face{v}, ambient) == RatVec{1});
    }
    for (const Face& f : wc->faces())
      CHECK(wc->space(f).dim <= 3);
  }
}
