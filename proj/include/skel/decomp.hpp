#pragma once

#include <compare>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace skel {

// Vertex (component, copy) of a decomposition graph; copies are 1-based.
struct DecompVertex {
  int component = 0;
  int copy = 0;
  auto operator<=>(const DecompVertex&) const = default;
};

// Unordered pair stored with the smaller endpoint first.
using DecompEdgeKey = std::pair<DecompVertex, DecompVertex>;

DecompEdgeKey make_decomp_edge(DecompVertex a, DecompVertex b);

// Combinatorial decomposition datum: a chosen number of copies per
// component, a genus and a mark count per copy, and connecting node
// multiplicities between copies of distinct components.
struct DecompositionDatum {
  std::vector<int> components;              // distinct, ascending
  std::map<int, int> copies;                // N_i >= 0, one entry per component
  std::map<DecompVertex, long long> genus;  // g_{ij} >= 0, one entry per copy
  std::map<DecompVertex, long long> marks;  // n_{ij} >= 0, one entry per copy
  std::map<DecompEdgeKey, long long> edges; // multiplicity >= 1; endpoints in
                                            // distinct components

  bool operator==(const DecompositionDatum&) const = default;
};

// Structural checks: nonempty component list, complete copy/genus/mark
// tables, no connecting nodes within one component, positive multiplicities.
void validate_datum(const DecompositionDatum& datum);
// Additionally N_i <= bound_i for every component.
void validate_against_bounds(const DecompositionDatum& datum,
                             const std::map<int, int>& copy_bounds);

// The multigraph of a datum: one vertex per copy, edge multiplicities
// expanded into parallel edges.
struct DecompGraph {
  std::vector<DecompVertex> vertices;
  std::vector<DecompEdgeKey> edges;
};

DecompGraph build_graph(const DecompositionDatum& datum);

std::size_t component_count(const DecompGraph& graph);
// First Betti number: E - V + number of connected components.
long long betti1(const DecompGraph& graph);
// The empty graph counts as not connected.
bool is_connected(const DecompGraph& graph);

// Type check: connected, betti1 + sum of copy genera = genus, and the mark
// counts sum to marks.
bool is_type(const DecompositionDatum& datum, long long genus, long long marks);

// Marked points after gluing: every copy keeps its own marks and gains one
// point per incident connecting node. Connecting node l between copies u and
// v glues the point labeled (l, u, v) on u to the point labeled (l, v, u) on v.
struct GluingPair {
  DecompVertex first_at;
  DecompVertex second_at;
  long long label = 0;

  bool operator==(const GluingPair&) const = default;
};

struct DerivedMarks {
  std::map<DecompVertex, long long> totals;
  std::vector<GluingPair> gluings;
};

DerivedMarks derived_marks(const DecompositionDatum& datum);

// An enumeration instance: the component list with copy bounds, and the
// target type.
struct EnumInstance {
  std::vector<int> components;
  std::map<int, int> copy_bounds;
  long long genus = 0;
  long long marks = 0;
};

// Number of worker threads from SKELETON_KIT_THREADS, default 1.
unsigned configured_worker_count();

// Streams every datum of the given type within the bounds, in ascending
// lexicographic order of the record (copies, genus table, mark table, dense
// connecting table). worker_count > 1 splits the outer copy vector choices
// across threads; the output order does not change.
void enumerate_data(const EnumInstance& instance,
                    const std::function<void(const DecompositionDatum&)>& sink,
                    unsigned worker_count = configured_worker_count());

long long count_data(const EnumInstance& instance,
                     unsigned worker_count = configured_worker_count());

// Lexicographically least relabeling of the datum under independent
// permutations of the copies of each component. Idempotent.
DecompositionDatum canonicalize(const DecompositionDatum& datum);
bool is_canonical(const DecompositionDatum& datum);

}  // namespace skel
