#include "skel/decomp.hpp"

#include "skel/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

namespace skel {

namespace {

std::string vertex_name(const DecompVertex& v) {
  return "(" + std::to_string(v.component) + "," + std::to_string(v.copy) + ")";
}

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

std::vector<DecompVertex> vertex_list(const DecompositionDatum& datum) {
  std::vector<DecompVertex> out;
  for (int c : datum.components)
    for (int j = 1; j <= datum.copies.at(c); ++j) out.push_back({c, j});
  return out;
}

}  // namespace

DecompEdgeKey make_decomp_edge(DecompVertex a, DecompVertex b) {
  if (a.component == b.component)
    throw Error(Errc::LoopEdge, "connecting node between copies of component " +
                                    std::to_string(a.component));
  return a < b ? DecompEdgeKey{a, b} : DecompEdgeKey{b, a};
}

void validate_datum(const DecompositionDatum& datum) {
  if (datum.components.empty())
    throw Error(Errc::Empty, "datum lists no components");
  if (!std::is_sorted(datum.components.begin(), datum.components.end()) ||
      std::adjacent_find(datum.components.begin(), datum.components.end()) !=
          datum.components.end())
    throw Error(Errc::SchemaError, "component ids must be distinct and ascending");
  if (datum.copies.size() != datum.components.size())
    throw Error(Errc::SchemaError, "copy table does not match the component list");
  for (int c : datum.components) {
    auto it = datum.copies.find(c);
    if (it == datum.copies.end())
      throw Error(Errc::SchemaError, "no copy count for component " + std::to_string(c));
    if (it->second < 0)
      throw Error(Errc::NegativeCount, "copy count of component " + std::to_string(c));
  }

  const std::vector<DecompVertex> vertices = vertex_list(datum);
  auto check_table = [&](const std::map<DecompVertex, long long>& table, const char* what) {
    if (table.size() != vertices.size())
      throw Error(Errc::SchemaError, std::string(what) + " table does not match the copies");
    for (const DecompVertex& v : vertices) {
      auto it = table.find(v);
      if (it == table.end())
        throw Error(Errc::SchemaError, std::string(what) + " missing for " + vertex_name(v));
      if (it->second < 0)
        throw Error(Errc::NegativeCount, std::string(what) + " of " + vertex_name(v));
    }
  };
  check_table(datum.genus, "genus");
  check_table(datum.marks, "marks");

  for (const auto& [key, count] : datum.edges) {
    const auto& [a, b] = key;
    if (!std::binary_search(vertices.begin(), vertices.end(), a) ||
        !std::binary_search(vertices.begin(), vertices.end(), b))
      throw Error(Errc::SchemaError, "connecting node at unknown copy " + vertex_name(a) +
                                         "-" + vertex_name(b));
    if (a.component == b.component)
      throw Error(Errc::LoopEdge, "connecting node inside component " +
                                      std::to_string(a.component));
    if (!(a < b))
      throw Error(Errc::SchemaError, "connecting node key " + vertex_name(a) + "-" +
                                         vertex_name(b) + " is not normalized");
    if (count <= 0)
      throw Error(Errc::NegativeCount,
                  "connecting node multiplicity at " + vertex_name(a) + "-" + vertex_name(b));
  }
}

void validate_against_bounds(const DecompositionDatum& datum,
                             const std::map<int, int>& copy_bounds) {
  validate_datum(datum);
  for (int c : datum.components) {
    auto it = copy_bounds.find(c);
    if (it == copy_bounds.end())
      throw Error(Errc::SchemaError, "no copy bound for component " + std::to_string(c));
    if (datum.copies.at(c) > it->second)
      throw Error(Errc::BoundExceeded, "component " + std::to_string(c) + " uses " +
                                           std::to_string(datum.copies.at(c)) +
                                           " copies, bound " + std::to_string(it->second));
  }
}

DecompGraph build_graph(const DecompositionDatum& datum) {
  validate_datum(datum);
  DecompGraph graph;
  graph.vertices = vertex_list(datum);
  for (const auto& [key, count] : datum.edges)
    for (long long l = 0; l < count; ++l) graph.edges.push_back(key);
  return graph;
}

std::size_t component_count(const DecompGraph& graph) {
  if (graph.vertices.empty()) return 0;
  std::map<DecompVertex, std::size_t> index;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i) index[graph.vertices[i]] = i;
  UnionFind uf(graph.vertices.size());
  for (const auto& [a, b] : graph.edges) uf.unite(index.at(a), index.at(b));
  std::size_t count = 0;
  for (std::size_t i = 0; i < graph.vertices.size(); ++i)
    if (uf.find(i) == i) ++count;
  return count;
}

long long betti1(const DecompGraph& graph) {
  return static_cast<long long>(graph.edges.size()) -
         static_cast<long long>(graph.vertices.size()) +
         static_cast<long long>(component_count(graph));
}

bool is_connected(const DecompGraph& graph) { return component_count(graph) == 1; }

bool is_type(const DecompositionDatum& datum, long long genus, long long marks) {
  const DecompGraph graph = build_graph(datum);
  if (!is_connected(graph)) return false;
  long long genus_sum = 0;
  for (const auto& [v, g] : datum.genus) {
    (void)v;
    genus_sum += g;
  }
  long long mark_sum = 0;
  for (const auto& [v, n] : datum.marks) {
    (void)v;
    mark_sum += n;
  }
  return betti1(graph) + genus_sum == genus && mark_sum == marks;
}

DerivedMarks derived_marks(const DecompositionDatum& datum) {
  validate_datum(datum);
  DerivedMarks out;
  out.totals = datum.marks;
  for (const auto& [key, count] : datum.edges) {
    out.totals[key.first] += count;
    out.totals[key.second] += count;
    for (long long l = 1; l <= count; ++l)
      out.gluings.push_back({key.first, key.second, l});
  }
  return out;
}

unsigned configured_worker_count() {
  const char* env = std::getenv("SKELETON_KIT_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 1;
  return static_cast<unsigned>(std::min(v, 64L));
}

namespace {

// Inner enumeration for one fixed copy vector. Emits data in ascending
// lexicographic order of (genus table, mark table, dense connecting table).
class FixedCopyEnumerator {
public:
  FixedCopyEnumerator(const EnumInstance& instance, std::vector<int> copy_vector,
                      const std::function<void(const DecompositionDatum&)>& sink)
      : instance_(instance), copy_vector_(std::move(copy_vector)), sink_(sink) {
    for (std::size_t c = 0; c < instance_.components.size(); ++c)
      for (int j = 1; j <= copy_vector_[c]; ++j)
        vertices_.push_back({instance_.components[c], j});
    for (std::size_t a = 0; a < vertices_.size(); ++a)
      for (std::size_t b = a + 1; b < vertices_.size(); ++b)
        if (vertices_[a].component != vertices_[b].component)
          pairs_.emplace_back(vertices_[a], vertices_[b]);
  }

  void run() {
    if (vertices_.empty()) return;  // the empty graph is never of type (g, n)
    genus_choice_.assign(vertices_.size(), 0);
    choose_genus(0, 0);
  }

private:
  void choose_genus(std::size_t idx, long long used) {
    if (idx == vertices_.size()) {
      edge_budget_ = instance_.genus - used + static_cast<long long>(vertices_.size()) - 1;
      mark_choice_.assign(vertices_.size(), 0);
      choose_marks(0, instance_.marks);
      return;
    }
    for (long long g = 0; used + g <= instance_.genus; ++g) {
      genus_choice_[idx] = g;
      choose_genus(idx + 1, used + g);
    }
    genus_choice_[idx] = 0;
  }

  void choose_marks(std::size_t idx, long long remaining) {
    if (idx == vertices_.size()) {
      if (remaining != 0) return;
      edge_choice_.assign(pairs_.size(), 0);
      choose_edges(0, edge_budget_);
      return;
    }
    if (idx + 1 == vertices_.size()) {
      mark_choice_[idx] = remaining;
      choose_marks(idx + 1, 0);
      mark_choice_[idx] = 0;
      return;
    }
    for (long long n = 0; n <= remaining; ++n) {
      mark_choice_[idx] = n;
      choose_marks(idx + 1, remaining - n);
    }
    mark_choice_[idx] = 0;
  }

  void choose_edges(std::size_t idx, long long remaining) {
    if (idx == pairs_.size()) {
      if (remaining == 0) emit();
      return;
    }
    if (idx + 1 == pairs_.size()) {
      edge_choice_[idx] = remaining;
      choose_edges(idx + 1, 0);
      edge_choice_[idx] = 0;
      return;
    }
    for (long long m = 0; m <= remaining; ++m) {
      edge_choice_[idx] = m;
      choose_edges(idx + 1, remaining - m);
    }
    edge_choice_[idx] = 0;
  }

  void emit() {
    UnionFind uf(vertices_.size());
    std::map<DecompVertex, std::size_t> index;
    for (std::size_t i = 0; i < vertices_.size(); ++i) index[vertices_[i]] = i;
    for (std::size_t p = 0; p < pairs_.size(); ++p)
      if (edge_choice_[p] > 0)
        uf.unite(index.at(pairs_[p].first), index.at(pairs_[p].second));
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (uf.find(i) != uf.find(0)) return;

    DecompositionDatum datum;
    datum.components = instance_.components;
    for (std::size_t c = 0; c < instance_.components.size(); ++c)
      datum.copies[instance_.components[c]] = copy_vector_[c];
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      datum.genus[vertices_[i]] = genus_choice_[i];
      datum.marks[vertices_[i]] = mark_choice_[i];
    }
    for (std::size_t p = 0; p < pairs_.size(); ++p)
      if (edge_choice_[p] > 0) datum.edges[pairs_[p]] = edge_choice_[p];
    sink_(datum);
  }

  const EnumInstance& instance_;
  std::vector<int> copy_vector_;
  const std::function<void(const DecompositionDatum&)>& sink_;
  std::vector<DecompVertex> vertices_;
  std::vector<DecompEdgeKey> pairs_;
  std::vector<long long> genus_choice_;
  std::vector<long long> mark_choice_;
  std::vector<long long> edge_choice_;
  long long edge_budget_ = 0;
};

std::vector<std::vector<int>> copy_vectors(const EnumInstance& instance) {
  std::vector<int> bounds;
  for (int c : instance.components) {
    auto it = instance.copy_bounds.find(c);
    if (it == instance.copy_bounds.end())
      throw Error(Errc::SchemaError, "no copy bound for component " + std::to_string(c));
    if (it->second < 0)
      throw Error(Errc::NegativeCount, "copy bound of component " + std::to_string(c));
    bounds.push_back(it->second);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> current(bounds.size(), 0);
  while (true) {
    out.push_back(current);
    std::size_t pos = bounds.size();
    while (pos > 0) {
      --pos;
      if (current[pos] < bounds[pos]) {
        ++current[pos];
        std::fill(current.begin() + pos + 1, current.end(), 0);
        break;
      }
      if (pos == 0) return out;
    }
  }
}

void check_instance(const EnumInstance& instance) {
  if (instance.components.empty())
    throw Error(Errc::Empty, "instance lists no components");
  if (!std::is_sorted(instance.components.begin(), instance.components.end()) ||
      std::adjacent_find(instance.components.begin(), instance.components.end()) !=
          instance.components.end())
    throw Error(Errc::SchemaError, "component ids must be distinct and ascending");
  if (instance.genus < 0 || instance.marks < 0)
    throw Error(Errc::NegativeCount, "type (genus, marks) must be nonnegative");
}

}  // namespace

void enumerate_data(const EnumInstance& instance,
                    const std::function<void(const DecompositionDatum&)>& sink,
                    unsigned worker_count) {
  check_instance(instance);
  const std::vector<std::vector<int>> outer = copy_vectors(instance);

  if (worker_count <= 1) {
    for (const auto& copy_vector : outer)
      FixedCopyEnumerator(instance, copy_vector, sink).run();
    return;
  }

  // Workers fill one result slot per copy vector; the merge below preserves
  // the sequential emission order.
  std::vector<std::vector<DecompositionDatum>> results(outer.size());
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= outer.size()) return;
      auto& slot = results[idx];
      FixedCopyEnumerator(instance, outer[idx],
                          [&slot](const DecompositionDatum& d) { slot.push_back(d); })
          .run();
    }
  };
  std::vector<std::thread> threads;
  const unsigned n = std::min<unsigned>(worker_count, static_cast<unsigned>(outer.size()));
  threads.reserve(n);
  for (unsigned t = 0; t < n; ++t) threads.emplace_back(work);
  for (auto& t : threads) t.join();
  for (const auto& slot : results)
    for (const DecompositionDatum& d : slot) sink(d);
}

long long count_data(const EnumInstance& instance, unsigned worker_count) {
  long long count = 0;
  enumerate_data(instance, [&count](const DecompositionDatum&) { ++count; }, worker_count);
  return count;
}

namespace {

std::vector<long long> comparison_key(const DecompositionDatum& datum,
                                      const std::vector<DecompVertex>& vertices,
                                      const std::vector<DecompEdgeKey>& pairs) {
  std::vector<long long> key;
  key.reserve(2 * vertices.size() + pairs.size());
  for (const DecompVertex& v : vertices) key.push_back(datum.genus.at(v));
  for (const DecompVertex& v : vertices) key.push_back(datum.marks.at(v));
  for (const DecompEdgeKey& p : pairs) {
    auto it = datum.edges.find(p);
    key.push_back(it == datum.edges.end() ? 0 : it->second);
  }
  return key;
}

DecompositionDatum apply_relabeling(const DecompositionDatum& datum,
                                    const std::map<int, std::vector<int>>& perms) {
  auto relabel = [&perms](DecompVertex v) {
    return DecompVertex{v.component, perms.at(v.component)[v.copy - 1]};
  };
  DecompositionDatum out;
  out.components = datum.components;
  out.copies = datum.copies;
  for (const auto& [v, g] : datum.genus) out.genus[relabel(v)] = g;
  for (const auto& [v, n] : datum.marks) out.marks[relabel(v)] = n;
  for (const auto& [key, count] : datum.edges)
    out.edges[make_decomp_edge(relabel(key.first), relabel(key.second))] = count;
  return out;
}

}  // namespace

DecompositionDatum canonicalize(const DecompositionDatum& datum) {
  validate_datum(datum);
  const std::vector<DecompVertex> vertices = vertex_list(datum);
  std::vector<DecompEdgeKey> pairs;
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a].component != vertices[b].component)
        pairs.emplace_back(vertices[a], vertices[b]);

  DecompositionDatum best = datum;
  std::vector<long long> best_key = comparison_key(datum, vertices, pairs);

  // Odometer over per component permutations of the copy labels.
  std::map<int, std::vector<int>> perms;
  for (int c : datum.components) {
    std::vector<int> identity(datum.copies.at(c));
    std::iota(identity.begin(), identity.end(), 1);
    perms[c] = std::move(identity);
  }
  while (true) {
    std::size_t idx = datum.components.size();
    bool advanced = false;
    while (idx > 0) {
      --idx;
      auto& perm = perms.at(datum.components[idx]);
      if (std::next_permutation(perm.begin(), perm.end())) {
        advanced = true;
        break;
      }
      // next_permutation wrapped this slot back to the identity; carry on.
    }
    if (!advanced) break;
    const DecompositionDatum candidate = apply_relabeling(datum, perms);
    std::vector<long long> key = comparison_key(candidate, vertices, pairs);
    if (key < best_key) {
      best = candidate;
      best_key = std::move(key);
    }
  }
  return best;
}

bool is_canonical(const DecompositionDatum& datum) { return canonicalize(datum) == datum; }

}  // namespace skel
