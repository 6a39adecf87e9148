#include "skel/document.hpp"

#include "skel/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace skel {

using nlohmann::json;

namespace {

// --- shared helpers -------------------------------------------------------

const json& get_field(const json& obj, const char* name, const std::string& path) {
  if (!obj.is_object())
    throw Error(Errc::SchemaError, path + ": expected an object");
  auto it = obj.find(name);
  if (it == obj.end())
    throw Error(Errc::SchemaError, path + ": missing field '" + name + "'");
  return *it;
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& path) {
  if (!obj.is_object())
    throw Error(Errc::SchemaError, path + ": expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* name : allowed)
      if (it.key() == name) {
        known = true;
        break;
      }
    if (!known)
      throw Error(Errc::SchemaError, path + "." + it.key() + ": unknown field");
  }
}

long long get_integer(const json& j, const std::string& path) {
  if (!j.is_number_integer())
    throw Error(Errc::SchemaError, path + ": expected an integer");
  return j.get<long long>();
}

int get_int(const json& j, const std::string& path) {
  const long long v = get_integer(j, path);
  if (v < INT32_MIN || v > INT32_MAX)
    throw Error(Errc::SchemaError, path + ": integer out of range");
  return static_cast<int>(v);
}

Rat get_rational(const json& j, const std::string& path) {
  if (!j.is_string())
    throw Error(Errc::SchemaError, path + ": rationals are written as strings");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(Errc::SchemaError, path + ": " + e.what());
  }
}

const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw Error(Errc::SchemaError, path + ": expected an array");
  return j;
}

Face get_face(const json& j, const std::string& path) {
  const json& arr = get_array(j, path);
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < arr.size(); ++i)
    ids.push_back(get_int(arr[i], path + "[" + std::to_string(i) + "]"));
  try {
    return make_face(std::move(ids));
  } catch (const Error& e) {
    throw Error(Errc::SchemaError, path + ": " + e.what());
  }
}

json face_to_json(const Face& f) {
  json out = json::array();
  for (VertexId v : f) out.push_back(v);
  return out;
}

RatVec get_rat_vec(const json& j, const std::string& path) {
  const json& arr = get_array(j, path);
  RatVec out;
  for (std::size_t i = 0; i < arr.size(); ++i)
    out.push_back(get_rational(arr[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

json rat_vec_to_json(const RatVec& v) {
  json out = json::array();
  for (const Rat& x : v) out.push_back(rat_to_string(x));
  return out;
}

RatMatrix get_matrix(const json& j, std::size_t rows, std::size_t cols,
                     const std::string& path) {
  const json& arr = get_array(j, path);
  if (arr.size() != rows)
    throw Error(Errc::SchemaError, path + ": expected " + std::to_string(rows) + " rows");
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string row_path = path + "[" + std::to_string(r) + "]";
    const json& row = get_array(arr[r], row_path);
    if (row.size() != cols)
      throw Error(Errc::SchemaError,
                  row_path + ": expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = get_rational(row[c], row_path + "[" + std::to_string(c) + "]");
  }
  return m;
}

json matrix_to_json(const RatMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

std::map<VertexId, Rat> get_vertex_values(const json& j, const std::string& path) {
  const json& arr = get_array(j, path);
  std::map<VertexId, Rat> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string entry_path = path + "[" + std::to_string(i) + "]";
    check_keys(arr[i], {"vertex", "value"}, entry_path);
    const VertexId v = get_int(get_field(arr[i], "vertex", entry_path), entry_path + ".vertex");
    if (!out.emplace(v, get_rational(get_field(arr[i], "value", entry_path),
                                     entry_path + ".value"))
             .second)
      throw Error(Errc::SchemaError, entry_path + ": vertex listed twice");
  }
  return out;
}

json vertex_values_to_json(const std::map<VertexId, Rat>& values) {
  json out = json::array();
  for (const auto& [v, val] : values)
    out.push_back(json{{"vertex", v}, {"value", rat_to_string(val)}});
  return out;
}

// --- weighted complexes ---------------------------------------------------

std::shared_ptr<const WeightedComplex> parse_complex_payload(const json& payload,
                                                             const std::string& path) {
  check_keys(payload, {"vertices", "faces", "class_spaces", "restrictions"}, path);
  ComplexData data;
  const json& vertices = get_array(get_field(payload, "vertices", path), path + ".vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string vp = path + ".vertices[" + std::to_string(i) + "]";
    check_keys(vertices[i], {"id", "mult"}, vp);
    const VertexId id = get_int(get_field(vertices[i], "id", vp), vp + ".id");
    const long long mult = get_integer(get_field(vertices[i], "mult", vp), vp + ".mult");
    data.vertex_order.push_back(id);
    if (!data.multiplicities.emplace(id, mult).second)
      throw Error(Errc::SchemaError, vp + ": vertex listed twice");
  }
  const json& faces = get_array(get_field(payload, "faces", path), path + ".faces");
  for (std::size_t i = 0; i < faces.size(); ++i)
    data.faces.insert(get_face(faces[i], path + ".faces[" + std::to_string(i) + "]"));

  const json& spaces = get_array(get_field(payload, "class_spaces", path),
                                 path + ".class_spaces");
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    const std::string sp = path + ".class_spaces[" + std::to_string(i) + "]";
    check_keys(spaces[i], {"face", "dim", "classes", "test_curves"}, sp);
    const Face face = get_face(get_field(spaces[i], "face", sp), sp + ".face");
    NumClassSpace space;
    const long long dim = get_integer(get_field(spaces[i], "dim", sp), sp + ".dim");
    if (dim < 0) throw Error(Errc::SchemaError, sp + ".dim: negative dimension");
    space.dim = static_cast<std::size_t>(dim);
    const json& classes = get_array(get_field(spaces[i], "classes", sp), sp + ".classes");
    for (std::size_t k = 0; k < classes.size(); ++k) {
      const std::string cp = sp + ".classes[" + std::to_string(k) + "]";
      check_keys(classes[k], {"vertex", "coords"}, cp);
      const VertexId v = get_int(get_field(classes[k], "vertex", cp), cp + ".vertex");
      if (!space.divisor_classes
               .emplace(v, get_rat_vec(get_field(classes[k], "coords", cp), cp + ".coords"))
               .second)
        throw Error(Errc::SchemaError, cp + ": vertex listed twice");
    }
    const json& curves = get_array(get_field(spaces[i], "test_curves", sp),
                                   sp + ".test_curves");
    for (std::size_t k = 0; k < curves.size(); ++k)
      space.test_curves.push_back(
          get_rat_vec(curves[k], sp + ".test_curves[" + std::to_string(k) + "]"));
    if (!data.class_spaces.emplace(face, std::move(space)).second)
      throw Error(Errc::SchemaError, sp + ": face listed twice");
  }

  const json& restrictions = get_array(get_field(payload, "restrictions", path),
                                       path + ".restrictions");
  for (std::size_t i = 0; i < restrictions.size(); ++i) {
    const std::string rp = path + ".restrictions[" + std::to_string(i) + "]";
    check_keys(restrictions[i], {"from", "to", "matrix"}, rp);
    const Face from = get_face(get_field(restrictions[i], "from", rp), rp + ".from");
    const Face to = get_face(get_field(restrictions[i], "to", rp), rp + ".to");
    auto from_space = data.class_spaces.find(from);
    auto to_space = data.class_spaces.find(to);
    if (from_space == data.class_spaces.end() || to_space == data.class_spaces.end())
      throw Error(Errc::SchemaError, rp + ": restriction between unlisted faces");
    RatMatrix m = get_matrix(get_field(restrictions[i], "matrix", rp), to_space->second.dim,
                             from_space->second.dim, rp + ".matrix");
    if (!data.restrictions.emplace(std::pair(from, to), std::move(m)).second)
      throw Error(Errc::SchemaError, rp + ": restriction listed twice");
  }
  return WeightedComplex::validate(std::move(data));
}

json complex_payload_to_json(const WeightedComplex& wc) {
  json payload;
  json vertices = json::array();
  for (VertexId v : wc.vertex_order())
    vertices.push_back(json{{"id", v}, {"mult", wc.mult(v)}});
  payload["vertices"] = std::move(vertices);

  json faces = json::array();
  for (const Face& f : wc.faces()) faces.push_back(face_to_json(f));
  payload["faces"] = std::move(faces);

  json spaces = json::array();
  for (const Face& f : wc.faces()) {
    const NumClassSpace& space = wc.space(f);
    json entry;
    entry["face"] = face_to_json(f);
    entry["dim"] = space.dim;
    json classes = json::array();
    for (const auto& [v, c] : space.divisor_classes)
      classes.push_back(json{{"vertex", v}, {"coords", rat_vec_to_json(c)}});
    entry["classes"] = std::move(classes);
    json curves = json::array();
    for (const RatVec& t : space.test_curves) curves.push_back(rat_vec_to_json(t));
    entry["test_curves"] = std::move(curves);
    spaces.push_back(std::move(entry));
  }
  payload["class_spaces"] = std::move(spaces);

  json restrictions = json::array();
  for (const auto& [key, m] : wc.restriction_family())
    restrictions.push_back(json{{"from", face_to_json(key.first)},
                                {"to", face_to_json(key.second)},
                                {"matrix", matrix_to_json(m)}});
  payload["restrictions"] = std::move(restrictions);
  return payload;
}

// --- curve skeletons ------------------------------------------------------

CurveSkeleton parse_skeleton_payload(const json& payload, const std::string& path) {
  check_keys(payload, {"vertices", "edges"}, path);
  std::vector<std::pair<VertexId, long long>> vertices;
  const json& vs = get_array(get_field(payload, "vertices", path), path + ".vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string vp = path + ".vertices[" + std::to_string(i) + "]";
    check_keys(vs[i], {"id", "mult"}, vp);
    vertices.emplace_back(get_int(get_field(vs[i], "id", vp), vp + ".id"),
                          get_integer(get_field(vs[i], "mult", vp), vp + ".mult"));
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  const json& es = get_array(get_field(payload, "edges", path), path + ".edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string ep = path + ".edges[" + std::to_string(i) + "]";
    const json& e = get_array(es[i], ep);
    if (e.size() != 2) throw Error(Errc::SchemaError, ep + ": an edge has two endpoints");
    edges.emplace_back(get_int(e[0], ep + "[0]"), get_int(e[1], ep + "[1]"));
  }
  return CurveSkeleton::build(std::move(vertices), std::move(edges));
}

json skeleton_payload_to_json(const CurveSkeleton& sk) {
  json payload;
  json vertices = json::array();
  for (VertexId v : sk.vertex_order())
    vertices.push_back(json{{"id", v}, {"mult", sk.mult(v)}});
  payload["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const EdgeKey& e : sk.edges()) edges.push_back(json::array({e.first, e.second}));
  payload["edges"] = std::move(edges);
  return payload;
}

// --- morphisms --------------------------------------------------------------

SkeletonMorphism parse_morphism_payload(const json& payload, const std::string& path) {
  check_keys(payload, {"source", "target", "matrix", "face_images", "class_pullbacks"},
             path);
  MorphismData data;
  data.source = parse_complex_payload(get_field(payload, "source", path), path + ".source");
  data.target = parse_complex_payload(get_field(payload, "target", path), path + ".target");

  const json& matrix = get_array(get_field(payload, "matrix", path), path + ".matrix");
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    const std::string mp = path + ".matrix[" + std::to_string(i) + "]";
    check_keys(matrix[i], {"from", "to", "count"}, mp);
    const VertexId from = get_int(get_field(matrix[i], "from", mp), mp + ".from");
    const VertexId to = get_int(get_field(matrix[i], "to", mp), mp + ".to");
    const long long count = get_integer(get_field(matrix[i], "count", mp), mp + ".count");
    if (count == 0) continue;
    if (!data.matrix[from].emplace(to, count).second)
      throw Error(Errc::SchemaError, mp + ": entry listed twice");
  }

  const json& images = get_array(get_field(payload, "face_images", path),
                                 path + ".face_images");
  for (std::size_t i = 0; i < images.size(); ++i) {
    const std::string ip = path + ".face_images[" + std::to_string(i) + "]";
    check_keys(images[i], {"from", "to"}, ip);
    const Face from = get_face(get_field(images[i], "from", ip), ip + ".from");
    const Face to = get_face(get_field(images[i], "to", ip), ip + ".to");
    if (!data.face_images.emplace(from, to).second)
      throw Error(Errc::SchemaError, ip + ": face listed twice");
  }

  const json& pullbacks = get_array(get_field(payload, "class_pullbacks", path),
                                    path + ".class_pullbacks");
  for (std::size_t i = 0; i < pullbacks.size(); ++i) {
    const std::string pp = path + ".class_pullbacks[" + std::to_string(i) + "]";
    check_keys(pullbacks[i], {"face", "matrix"}, pp);
    const Face face = get_face(get_field(pullbacks[i], "face", pp), pp + ".face");
    if (!data.source->has_face(face))
      throw Error(Errc::SchemaError, pp + ": unknown source face");
    auto image = data.face_images.find(face);
    if (image == data.face_images.end() || !data.target->has_face(image->second))
      throw Error(Errc::SchemaError, pp + ": face has no usable image");
    RatMatrix m = get_matrix(get_field(pullbacks[i], "matrix", pp),
                             data.source->space(face).dim,
                             data.target->space(image->second).dim, pp + ".matrix");
    if (!data.class_pullbacks.emplace(face, std::move(m)).second)
      throw Error(Errc::SchemaError, pp + ": face listed twice");
  }
  return SkeletonMorphism::validate(std::move(data));
}

json morphism_payload_to_json(const SkeletonMorphism& morphism) {
  json payload;
  payload["source"] = complex_payload_to_json(*morphism.source());
  payload["target"] = complex_payload_to_json(*morphism.target());

  json matrix = json::array();
  for (VertexId i : morphism.source()->vertex_order())
    for (VertexId j : morphism.target()->vertex_order()) {
      const long long a = morphism.entry(i, j);
      if (a != 0) matrix.push_back(json{{"from", i}, {"to", j}, {"count", a}});
    }
  payload["matrix"] = std::move(matrix);

  json images = json::array();
  json pullbacks = json::array();
  for (const Face& f : morphism.source()->faces()) {
    images.push_back(json{{"from", face_to_json(f)},
                          {"to", face_to_json(morphism.face_image(f))}});
    pullbacks.push_back(json{{"face", face_to_json(f)},
                             {"matrix", matrix_to_json(morphism.class_pullback(f))}});
  }
  payload["face_images"] = std::move(images);
  payload["class_pullbacks"] = std::move(pullbacks);
  return payload;
}

// --- decomposition data -----------------------------------------------------

std::vector<DecompEdgeKey> cross_pairs(const DecompositionDatum& datum) {
  std::vector<DecompVertex> vertices;
  for (int c : datum.components)
    for (int j = 1; j <= datum.copies.at(c); ++j) vertices.push_back({c, j});
  std::vector<DecompEdgeKey> pairs;
  for (std::size_t a = 0; a < vertices.size(); ++a)
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (vertices[a].component != vertices[b].component)
        pairs.emplace_back(vertices[a], vertices[b]);
  return pairs;
}

DecompositionDatum parse_decomp_payload(const json& payload, const std::string& path) {
  check_keys(payload, {"N", "components", "g", "n", "pairings"}, path);
  DecompositionDatum datum;
  const json& components = get_array(get_field(payload, "components", path),
                                     path + ".components");
  for (std::size_t i = 0; i < components.size(); ++i)
    datum.components.push_back(
        get_int(components[i], path + ".components[" + std::to_string(i) + "]"));

  const json& copies = get_array(get_field(payload, "N", path), path + ".N");
  if (copies.size() != datum.components.size())
    throw Error(Errc::SchemaError, path + ".N: one entry per component required");
  for (std::size_t i = 0; i < copies.size(); ++i)
    datum.copies[datum.components[i]] =
        get_int(copies[i], path + ".N[" + std::to_string(i) + "]");

  auto read_table = [&](const char* name, std::map<DecompVertex, long long>& table) {
    const std::string tp = path + "." + name;
    const json& rows = get_array(get_field(payload, name, path), tp);
    if (rows.size() != datum.components.size())
      throw Error(Errc::SchemaError, tp + ": one row per component required");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string rp = tp + "[" + std::to_string(i) + "]";
      const json& row = get_array(rows[i], rp);
      const int c = datum.components[i];
      if (row.size() != static_cast<std::size_t>(std::max(datum.copies.at(c), 0)))
        throw Error(Errc::SchemaError, rp + ": one entry per copy required");
      for (std::size_t j = 0; j < row.size(); ++j)
        table[{c, static_cast<int>(j) + 1}] =
            get_integer(row[j], rp + "[" + std::to_string(j) + "]");
    }
  };
  read_table("g", datum.genus);
  read_table("n", datum.marks);

  const std::vector<DecompEdgeKey> pairs = cross_pairs(datum);
  const json& pairings = get_array(get_field(payload, "pairings", path), path + ".pairings");
  if (pairings.size() != pairs.size())
    throw Error(Errc::SchemaError,
                path + ".pairings: expected " + std::to_string(pairs.size()) + " entries");
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const long long count =
        get_integer(pairings[p], path + ".pairings[" + std::to_string(p) + "]");
    if (count < 0)
      throw Error(Errc::SchemaError,
                  path + ".pairings[" + std::to_string(p) + "]: negative multiplicity");
    if (count > 0) datum.edges[pairs[p]] = count;
  }
  validate_datum(datum);
  return datum;
}

json decomp_payload_to_json(const DecompositionDatum& datum) {
  json payload;
  json components = json::array();
  json copies = json::array();
  for (int c : datum.components) {
    components.push_back(c);
    copies.push_back(datum.copies.at(c));
  }
  payload["components"] = std::move(components);
  payload["N"] = std::move(copies);

  auto table_to_json = [&datum](const std::map<DecompVertex, long long>& table) {
    json rows = json::array();
    for (int c : datum.components) {
      json row = json::array();
      for (int j = 1; j <= datum.copies.at(c); ++j) row.push_back(table.at({c, j}));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  payload["g"] = table_to_json(datum.genus);
  payload["n"] = table_to_json(datum.marks);

  json pairings = json::array();
  for (const DecompEdgeKey& p : cross_pairs(datum)) {
    auto it = datum.edges.find(p);
    pairings.push_back(it == datum.edges.end() ? 0 : it->second);
  }
  payload["pairings"] = std::move(pairings);
  return payload;
}

// --- data only kinds --------------------------------------------------------

BundleDoc parse_bundle_payload(const json& payload, const std::string& path) {
  check_keys(payload, {"germs"}, path);
  BundleDoc doc;
  const json& germs = get_array(get_field(payload, "germs", path), path + ".germs");
  for (std::size_t i = 0; i < germs.size(); ++i) {
    const std::string gp = path + ".germs[" + std::to_string(i) + "]";
    check_keys(germs[i], {"base", "values"}, gp);
    Germ germ;
    germ.base = get_int(get_field(germs[i], "base", gp), gp + ".base");
    germ.values = get_vertex_values(get_field(germs[i], "values", gp), gp + ".values");
    if (!doc.germs.emplace(germ.base, std::move(germ)).second)
      throw Error(Errc::SchemaError, gp + ": base vertex listed twice");
  }
  return doc;
}

json bundle_payload_to_json(const BundleDoc& doc) {
  json germs = json::array();
  for (const auto& [base, germ] : doc.germs)
    germs.push_back(json{{"base", base}, {"values", vertex_values_to_json(germ.values)}});
  return json{{"germs", std::move(germs)}};
}

CocycleDoc parse_cocycle_payload(const json& payload, const std::string& path) {
  check_keys(payload, {"edges"}, path);
  CocycleDoc doc;
  const json& edges = get_array(get_field(payload, "edges", path), path + ".edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string ep = path + ".edges[" + std::to_string(i) + "]";
    check_keys(edges[i], {"edge", "pair"}, ep);
    const json& edge = get_array(get_field(edges[i], "edge", ep), ep + ".edge");
    if (edge.size() != 2) throw Error(Errc::SchemaError, ep + ".edge: two endpoints required");
    const json& pair = get_array(get_field(edges[i], "pair", ep), ep + ".pair");
    if (pair.size() != 2) throw Error(Errc::SchemaError, ep + ".pair: two values required");
    const EdgeKey key{get_int(edge[0], ep + ".edge[0]"), get_int(edge[1], ep + ".edge[1]")};
    if (!doc.cocycle.pairs
             .emplace(key, std::pair(get_rational(pair[0], ep + ".pair[0]"),
                                     get_rational(pair[1], ep + ".pair[1]")))
             .second)
      throw Error(Errc::SchemaError, ep + ": edge listed twice");
  }
  return doc;
}

json cocycle_payload_to_json(const CocycleDoc& doc) {
  json edges = json::array();
  for (const auto& [key, pair] : doc.cocycle.pairs)
    edges.push_back(json{{"edge", json::array({key.first, key.second})},
                         {"pair", json::array({rat_to_string(pair.first),
                                               rat_to_string(pair.second)})}});
  return json{{"edges", std::move(edges)}};
}

GermFamilyDoc parse_germ_family_payload(const json& payload, const std::string& path) {
  check_keys(payload, {"germs"}, path);
  GermFamilyDoc doc;
  const json& germs = get_array(get_field(payload, "germs", path), path + ".germs");
  for (std::size_t i = 0; i < germs.size(); ++i) {
    const std::string gp = path + ".germs[" + std::to_string(i) + "]";
    check_keys(germs[i], {"vertex", "values"}, gp);
    const VertexId v = get_int(get_field(germs[i], "vertex", gp), gp + ".vertex");
    if (!doc.family.values
             .emplace(v, get_vertex_values(get_field(germs[i], "values", gp), gp + ".values"))
             .second)
      throw Error(Errc::SchemaError, gp + ": vertex listed twice");
  }
  return doc;
}

json germ_family_payload_to_json(const GermFamilyDoc& doc) {
  json germs = json::array();
  for (const auto& [v, values] : doc.family.values)
    germs.push_back(json{{"vertex", v}, {"values", vertex_values_to_json(values)}});
  return json{{"germs", std::move(germs)}};
}

}  // namespace

Document parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::SyntaxError, e.what());
  }
  if (!j.is_object()) throw Error(Errc::SchemaError, "$: document must be an object");
  check_keys(j, {"format_version", "kind", "payload"}, "$");
  const long long version = get_integer(get_field(j, "format_version", "$"),
                                        "$.format_version");
  if (version != kFormatVersion)
    throw Error(Errc::SchemaError,
                "$.format_version: unsupported version " + std::to_string(version));
  const json& kind_field = get_field(j, "kind", "$");
  if (!kind_field.is_string()) throw Error(Errc::SchemaError, "$.kind: expected a string");
  const std::string kind = kind_field.get<std::string>();
  const json& payload = get_field(j, "payload", "$");

  if (kind == "simple_function") check_keys(payload, {"values"}, "$.payload");
  if (kind == "weighted_complex")
    return ComplexDoc{parse_complex_payload(payload, "$.payload")};
  if (kind == "curve_skeleton")
    return SkeletonDoc{parse_skeleton_payload(payload, "$.payload")};
  if (kind == "skeleton_morphism")
    return MorphismDoc{parse_morphism_payload(payload, "$.payload")};
  if (kind == "decomposition")
    return DecompDoc{parse_decomp_payload(payload, "$.payload")};
  if (kind == "simple_function")
    return FunctionDoc{get_vertex_values(get_field(payload, "values", "$.payload"),
                                         "$.payload.values")};
  if (kind == "metrized_bundle")
    return parse_bundle_payload(payload, "$.payload");
  if (kind == "cocycle")
    return parse_cocycle_payload(payload, "$.payload");
  if (kind == "lin_germ_family")
    return parse_germ_family_payload(payload, "$.payload");
  throw Error(Errc::SchemaError, "$.kind: unknown document kind '" + kind + "'");
}

std::string serialize_document(const Document& doc) {
  json out;
  out["format_version"] = kFormatVersion;
  struct Visitor {
    json& out;
    void operator()(const ComplexDoc& d) {
      out["kind"] = "weighted_complex";
      out["payload"] = complex_payload_to_json(*d.complex);
    }
    void operator()(const SkeletonDoc& d) {
      out["kind"] = "curve_skeleton";
      out["payload"] = skeleton_payload_to_json(d.skeleton);
    }
    void operator()(const MorphismDoc& d) {
      out["kind"] = "skeleton_morphism";
      out["payload"] = morphism_payload_to_json(d.morphism);
    }
    void operator()(const DecompDoc& d) {
      out["kind"] = "decomposition";
      out["payload"] = decomp_payload_to_json(d.datum);
    }
    void operator()(const FunctionDoc& d) {
      out["kind"] = "simple_function";
      out["payload"] = json{{"values", vertex_values_to_json(d.values)}};
    }
    void operator()(const BundleDoc& d) {
      out["kind"] = "metrized_bundle";
      out["payload"] = bundle_payload_to_json(d);
    }
    void operator()(const CocycleDoc& d) {
      out["kind"] = "cocycle";
      out["payload"] = cocycle_payload_to_json(d);
    }
    void operator()(const GermFamilyDoc& d) {
      out["kind"] = "lin_germ_family";
      out["payload"] = germ_family_payload_to_json(d);
    }
  };
  std::visit(Visitor{out}, doc);
  return out.dump(2) + "\n";
}

Document load_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::SyntaxError, "cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

std::string decomp_record_line(const DecompositionDatum& datum) {
  return decomp_payload_to_json(datum).dump();
}

}  // namespace skel
