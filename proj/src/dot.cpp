#include "skel/dot.hpp"

#include <map>
#include <sstream>

namespace skel {

std::string render_skeleton_dot(const CurveSkeleton& sk,
                                const std::optional<Cocycle>& cocycle) {
  std::ostringstream out;
  out << "graph skeleton {\n";
  std::map<VertexId, std::size_t> index;
  for (VertexId v : sk.vertex_order()) {
    const std::size_t i = index.size();
    index.emplace(v, i);
    out << "  v" << i << " [label=\"" << v << ":" << sk.mult(v) << "\"];\n";
  }
  for (const EdgeKey& e : sk.edges()) {
    out << "  v" << index.at(e.first) << " -- v" << index.at(e.second);
    if (cocycle) {
      const auto& pair = cocycle->pairs.at(e);
      out << " [label=\"(" << rat_to_string(pair.first) << ", "
          << rat_to_string(pair.second) << ")\"]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_decomp_dot(const DecompositionDatum& datum) {
  std::ostringstream out;
  out << "graph decomposition {\n";
  std::map<DecompVertex, std::size_t> index;
  for (int c : datum.components)
    for (int j = 1; j <= datum.copies.at(c); ++j) {
      const DecompVertex v{c, j};
      const std::size_t i = index.size();
      index.emplace(v, i);
      out << "  v" << i << " [label=\"(" << c << "," << j << "):" << datum.genus.at(v)
          << "\"];\n";
    }
  for (const auto& [key, count] : datum.edges)
    for (long long l = 0; l < count; ++l)
      out << "  v" << index.at(key.first) << " -- v" << index.at(key.second) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace skel
