#include "skel/decomp.hpp"

#include "checking.hpp"
#include "doctest.h"
#include "generators.hpp"
#include "oracle.hpp"

#include <cstdlib>

using namespace skel;
using testgen::fails_with;

namespace {

DecompositionDatum bridge_datum(long long edge_count) {
  DecompositionDatum d;
  d.components = {1, 2};
  d.copies = {{1, 1}, {2, 1}};
  d.genus = {{{1, 1}, 0}, {{2, 1}, 0}};
  d.marks = {{{1, 1}, 0}, {{2, 1}, 0}};
  if (edge_count > 0) d.edges[{{1, 1}, {2, 1}}] = edge_count;
  return d;
}

}  // namespace

TEST_CASE("edge keys normalize and reject loops") {
  CHECK(make_decomp_edge({2, 1}, {1, 1}) == DecompEdgeKey{{1, 1}, {2, 1}});
  CHECK(fails_with(Errc::LoopEdge, [] { make_decomp_edge({1, 1}, {1, 2}); }));
}

TEST_CASE("structural validation") {
  validate_datum(bridge_datum(1));
  CHECK(fails_with(Errc::Empty, [] { validate_datum({}); }));
  CHECK(fails_with(Errc::SchemaError, [] {
    DecompositionDatum d = bridge_datum(1);
    d.components = {2, 1};
    validate_datum(d);
  }));
  CHECK(fails_with(Errc::SchemaError, [] {
    DecompositionDatum d = bridge_datum(1);
    d.copies.erase(2);
    validate_datum(d);
  }));
  CHECK(fails_with(Errc::NegativeCount, [] {
    DecompositionDatum d = bridge_datum(1);
    d.genus[{1, 1}] = -1;
    validate_datum(d);
  }));
  CHECK(fails_with(Errc::SchemaError, [] {
    DecompositionDatum d = bridge_datum(1);
    d.marks.erase({2, 1});
    validate_datum(d);
  }));
  CHECK(fails_with(Errc::NegativeCount, [] {
    DecompositionDatum d = bridge_datum(1);
    d.edges[{{1, 1}, {2, 1}}] = 0;
    validate_datum(d);
  }));
  CHECK(fails_with(Errc::SchemaError, [] {
    DecompositionDatum d = bridge_datum(1);
    d.edges[{{1, 2}, {2, 1}}] = 1;  // copy (1, 2) does not exist
    validate_datum(d);
  }));

  validate_against_bounds(bridge_datum(1), {{1, 1}, {2, 2}});
  CHECK(fails_with(Errc::BoundExceeded, [] {
    validate_against_bounds(bridge_datum(1), {{1, 0}, {2, 1}});
  }));
  CHECK(fails_with(Errc::SchemaError, [] {
    validate_against_bounds(bridge_datum(1), {{1, 1}});
  }));
}

TEST_CASE("graph invariants") {
  const DecompGraph single_bridge = build_graph(bridge_datum(1));
  CHECK(single_bridge.vertices.size() == 2);
  CHECK(single_bridge.edges.size() == 1);
  CHECK(is_connected(single_bridge));
  CHECK(betti1(single_bridge) == 0);

  // A doubled edge carries one cycle.
  const DecompGraph doubled = build_graph(bridge_datum(2));
  CHECK(doubled.edges.size() == 2);
  CHECK(betti1(doubled) == 1);

  const DecompGraph isolated = build_graph(bridge_datum(0));
  CHECK_FALSE(is_connected(isolated));
  CHECK(component_count(isolated) == 2);
  CHECK(betti1(isolated) == 0);

  // Two triangles glued along an edge: betti1 = 5 - 4 + 1 = 2.
  DecompositionDatum quilt;
  quilt.components = {1, 2, 3};
  quilt.copies = {{1, 2}, {2, 1}, {3, 1}};
  for (const DecompVertex v : {DecompVertex{1, 1}, {1, 2}, {2, 1}, {3, 1}}) {
    quilt.genus[v] = 0;
    quilt.marks[v] = 0;
  }
  quilt.edges[{{1, 1}, {2, 1}}] = 1;
  quilt.edges[{{1, 1}, {3, 1}}] = 1;
  quilt.edges[{{1, 2}, {2, 1}}] = 1;
  quilt.edges[{{1, 2}, {3, 1}}] = 1;
  quilt.edges[{{2, 1}, {3, 1}}] = 1;
  const DecompGraph two_triangles = build_graph(quilt);
  CHECK(betti1(two_triangles) == 2);
  CHECK(is_type(quilt, 2, 0));
  CHECK_FALSE(is_type(quilt, 2, 1));
  CHECK_FALSE(is_type(quilt, 1, 0));
}

TEST_CASE("spanning forest cross check on random data") {
  testgen::Rng rng(77);
  for (int round = 0; round < 200; ++round) {
    const DecompositionDatum datum = testgen::random_decomposition(rng);
    const DecompGraph graph = build_graph(datum);
    CHECK(betti1(graph) == testgen::cycle_rank_by_spanning_forest(graph));
  }
}

TEST_CASE("derived marks add one point per incident connecting node") {
  DecompositionDatum d = bridge_datum(2);
  d.marks[{1, 1}] = 1;
  const DerivedMarks derived = derived_marks(d);
  CHECK(derived.totals.at({1, 1}) == 3);
  CHECK(derived.totals.at({2, 1}) == 2);
  REQUIRE(derived.gluings.size() == 2);
  CHECK(derived.gluings[0] == GluingPair{{1, 1}, {2, 1}, 1});
  CHECK(derived.gluings[1] == GluingPair{{1, 1}, {2, 1}, 2});
}

TEST_CASE("canonicalization picks the least relabeling and is idempotent") {
  DecompositionDatum d;
  d.components = {1, 2};
  d.copies = {{1, 2}, {2, 1}};
  d.genus = {{{1, 1}, 1}, {{1, 2}, 0}, {{2, 1}, 0}};
  d.marks = {{{1, 1}, 0}, {{1, 2}, 0}, {{2, 1}, 0}};
  d.edges = {{{{1, 1}, {2, 1}}, 1}, {{{1, 2}, {2, 1}}, 1}};
  CHECK_FALSE(is_canonical(d));

  const DecompositionDatum c = canonicalize(d);
  CHECK(c.genus.at({1, 1}) == 0);
  CHECK(c.genus.at({1, 2}) == 1);
  CHECK(c.edges == d.edges);
  CHECK(is_canonical(c));
  CHECK(canonicalize(c) == c);
}

TEST_CASE("worker count honors the environment variable") {
  unsetenv("SKELETON_KIT_THREADS");
  CHECK(configured_worker_count() == 1);
  setenv("SKELETON_KIT_THREADS", "4", 1);
  CHECK(configured_worker_count() == 4);
  setenv("SKELETON_KIT_THREADS", "abc", 1);
  CHECK(configured_worker_count() == 1);
  setenv("SKELETON_KIT_THREADS", "0", 1);
  CHECK(configured_worker_count() == 1);
  setenv("SKELETON_KIT_THREADS", "100", 1);
  CHECK(configured_worker_count() == 64);
  unsetenv("SKELETON_KIT_THREADS");
}

TEST_CASE("enumeration matches the reference on small instances") {
  auto run = [](EnumInstance instance) {
    std::vector<DecompositionDatum> seen;
    enumerate_data(instance, [&seen](const DecompositionDatum& d) { seen.push_back(d); }, 1);
    CHECK(count_data(instance, 1) == static_cast<long long>(seen.size()));
    const std::vector<DecompositionDatum> expected = testgen::oracle_enumerate(instance);
    CHECK(seen == expected);

    // Worker parallelism must not change the stream.
    std::vector<DecompositionDatum> parallel;
    enumerate_data(instance,
                   [&parallel](const DecompositionDatum& d) { parallel.push_back(d); }, 4);
    CHECK(parallel == seen);
    return seen.size();
  };

  CHECK(run({{1}, {{1, 1}}, 0, 3}) == 1);
  CHECK(run({{1, 2}, {{1, 1}, {2, 1}}, 0, 0}) == 3);
  CHECK(run({{1}, {{1, 2}}, 1, 0}) == 1);
  run({{1, 2}, {{1, 2}, {2, 2}}, 2, 1});
  run({{1, 2, 3}, {{1, 1}, {2, 1}, {3, 1}}, 1, 1});
}

TEST_CASE("every enumerated datum is of the requested type and inside bounds") {
  const EnumInstance instance{{1, 2}, {{1, 2}, {2, 1}}, 1, 2};
  enumerate_data(instance, [&instance](const DecompositionDatum& d) {
    validate_against_bounds(d, instance.copy_bounds);
    CHECK(is_type(d, instance.genus, instance.marks));
  }, 1);
}

TEST_CASE("instance validation") {
  CHECK(fails_with(Errc::Empty, [] { count_data({{}, {}, 0, 0}, 1); }));
  CHECK(fails_with(Errc::SchemaError, [] { count_data({{2, 1}, {{1, 1}, {2, 1}}, 0, 0}, 1); }));
  CHECK(fails_with(Errc::SchemaError, [] { count_data({{1}, {}, 0, 0}, 1); }));
  CHECK(fails_with(Errc::NegativeCount, [] { count_data({{1}, {{1, 1}}, -1, 0}, 1); }));
}
