#include "skel/document.hpp"
#include "skel/dot.hpp"
#include "skel/errors.hpp"
#include "skel/morphism.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <variant>

namespace {

using namespace skel;

// Command line misuse that CLI11 cannot catch itself, e.g. a document of the
// wrong kind behind an option. Exits with code 2 like other usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string kind_name(const Document& doc) {
  struct Visitor {
    std::string operator()(const ComplexDoc&) { return "weighted_complex"; }
    std::string operator()(const SkeletonDoc&) { return "curve_skeleton"; }
    std::string operator()(const MorphismDoc&) { return "skeleton_morphism"; }
    std::string operator()(const DecompDoc&) { return "decomposition"; }
    std::string operator()(const FunctionDoc&) { return "simple_function"; }
    std::string operator()(const BundleDoc&) { return "metrized_bundle"; }
    std::string operator()(const CocycleDoc&) { return "cocycle"; }
    std::string operator()(const GermFamilyDoc&) { return "lin_germ_family"; }
  };
  return std::visit(Visitor{}, doc);
}

template <typename Doc>
const Doc& expect_kind(const Document& doc, const char* option, const char* wanted) {
  if (const auto* d = std::get_if<Doc>(&doc)) return *d;
  throw UsageError(std::string(option) + " must name a " + wanted + " document, got " +
                   kind_name(doc));
}

// --complex accepts a complex of either origin: a weighted_complex document
// or a curve_skeleton document, whose exported complex is used.
std::shared_ptr<const WeightedComplex> load_complex(const std::string& path,
                                                    const char* option) {
  const Document doc = load_document_file(path);
  if (const auto* c = std::get_if<ComplexDoc>(&doc)) return c->complex;
  if (const auto* s = std::get_if<SkeletonDoc>(&doc)) return s->skeleton.complex();
  throw UsageError(std::string(option) +
                   " must name a weighted_complex or curve_skeleton document, got " +
                   kind_name(doc));
}

CurveSkeleton load_skeleton(const std::string& path, const char* option) {
  const Document doc = load_document_file(path);
  return expect_kind<SkeletonDoc>(doc, option, "curve_skeleton").skeleton;
}

SkeletonMorphism load_morphism(const std::string& path, const char* option) {
  const Document doc = load_document_file(path);
  return expect_kind<MorphismDoc>(doc, option, "skeleton_morphism").morphism;
}

Cocycle load_cocycle(const std::string& path, const char* option) {
  const Document doc = load_document_file(path);
  return expect_kind<CocycleDoc>(doc, option, "cocycle").cocycle;
}

std::map<VertexId, Rat> load_function_values(const std::string& path, const char* option) {
  const Document doc = load_document_file(path);
  return expect_kind<FunctionDoc>(doc, option, "simple_function").values;
}

std::map<VertexId, Germ> load_germs(const std::string& path, const char* option) {
  const Document doc = load_document_file(path);
  return expect_kind<BundleDoc>(doc, option, "metrized_bundle").germs;
}

std::string format_vec(const RatVec& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out << ", ";
    out << rat_to_string(v[i]);
  }
  out << "]";
  return out.str();
}

void print_curvature(const WeightedComplex& wc, const std::map<VertexId, RatVec>& curv) {
  for (VertexId v : wc.vertex_order())
    std::cout << "vertex " << v << ": " << format_vec(curv.at(v)) << "\n";
}

std::vector<int> parse_int_list(const std::string& text, const char* option) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(value);
    } catch (const std::exception&) {
      throw UsageError(std::string(option) + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw UsageError(std::string(option) + ": empty list");
  return out;
}

struct EnumOptions {
  int components = 1;
  std::string bounds;
  long long genus = 0;
  long long marks = 0;
};

EnumInstance make_instance(const EnumOptions& opts) {
  if (opts.components < 1) throw UsageError("--components: at least one required");
  EnumInstance instance;
  const std::vector<int> bounds = parse_int_list(opts.bounds, "--bounds");
  if (bounds.size() != static_cast<std::size_t>(opts.components))
    throw UsageError("--bounds: one bound per component required");
  for (int c = 1; c <= opts.components; ++c) {
    instance.components.push_back(c);
    instance.copy_bounds[c] = bounds[static_cast<std::size_t>(c - 1)];
  }
  instance.genus = opts.genus;
  instance.marks = opts.marks;
  return instance;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact tools for weighted dual complexes, curve skeletons,\n"
               "metrized bundles and boundary decompositions."};
  app.require_subcommand(1);

  std::string doc_path, complex_path, skeleton_path, function_path, bundle_path;
  std::string morphism_path, cocycle_path, input_path;
  std::string pullback_what, order_text;
  EnumOptions enum_opts;
  bool canonical_only = false;
  bool count_only = false;

  auto* validate = app.add_subcommand("validate", "Check a document");
  validate->add_option("file", doc_path, "document to check")->required();
  validate->add_option("--complex", complex_path,
                       "carrier for simple_function and metrized_bundle documents");
  validate->add_option("--skeleton", skeleton_path,
                       "carrier for cocycle and lin_germ_family documents");
  validate->callback([&] {
    const Document doc = load_document_file(doc_path);
    struct Visitor {
      const std::string& complex_path;
      const std::string& skeleton_path;
      void operator()(const ComplexDoc&) {}
      void operator()(const SkeletonDoc&) {}
      void operator()(const MorphismDoc&) {}
      void operator()(const DecompDoc&) {}
      const std::string& want(const std::string& path, const char* flag) const {
        if (path.empty())
          throw UsageError(std::string("this document kind needs ") + flag +
                           " with its carrier");
        return path;
      }
      void operator()(const FunctionDoc& d) {
        make_simple_function(*load_complex(want(complex_path, "--complex"), "--complex"),
                             d.values);
      }
      void operator()(const BundleDoc& d) {
        validate_metrization(
            load_complex(want(complex_path, "--complex"), "--complex"), d.germs);
      }
      void operator()(const CocycleDoc& d) {
        validate_cocycle(load_skeleton(want(skeleton_path, "--skeleton"), "--skeleton"),
                         d.cocycle);
      }
      void operator()(const GermFamilyDoc& d) {
        validate_lin_germ_family(
            load_skeleton(want(skeleton_path, "--skeleton"), "--skeleton"), d.family);
      }
    };
    std::visit(Visitor{complex_path, skeleton_path}, doc);
    std::cout << "OK\n";
  });

  auto* classify = app.add_subcommand(
      "classify", "Per face linearity and convexity report for a function");
  classify->add_option("--function", function_path, "simple_function document")->required();
  classify->add_option("--complex", complex_path, "carrier complex")->required();
  classify->callback([&] {
    const auto wc = load_complex(complex_path, "--complex");
    const SimpleFunction f =
        make_simple_function(*wc, load_function_values(function_path, "--function"));
    const FaceClassification classification = classify_faces(*wc, f);
    FaceFlags all{true, true, true};
    for (const auto& [face, flags] : classification.flags) {
      std::cout << "face " << face_to_string(face) << ": linear=" << std::boolalpha
                << flags.linear << " convex=" << flags.convex
                << " strictly_convex=" << flags.strictly_convex << "\n";
      all.linear = all.linear && flags.linear;
      all.convex = all.convex && flags.convex;
      all.strictly_convex = all.strictly_convex && flags.strictly_convex;
    }
    std::cout << "all: linear=" << std::boolalpha << all.linear << " convex=" << all.convex
              << " strictly_convex=" << all.strictly_convex << "\n";
  });

  auto* curvature_cmd =
      app.add_subcommand("curvature", "Curvature classes of a metrized bundle");
  curvature_cmd->add_option("--bundle", bundle_path, "metrized_bundle document")->required();
  curvature_cmd->add_option("--complex", complex_path, "carrier complex")->required();
  curvature_cmd->callback([&] {
    const auto wc = load_complex(complex_path, "--complex");
    print_curvature(
        *wc, curvature(validate_metrization(wc, load_germs(bundle_path, "--bundle"))));
  });

  auto* kahler = app.add_subcommand(
      "kahler-check", "Whether every curvature derivative is ample");
  kahler->add_option("--bundle", bundle_path, "metrized_bundle document")->required();
  kahler->add_option("--complex", complex_path, "carrier complex")->required();
  kahler->callback([&] {
    const auto wc = load_complex(complex_path, "--complex");
    std::cout << std::boolalpha
              << is_kahler(validate_metrization(wc, load_germs(bundle_path, "--bundle")))
              << "\n";
  });

  auto* pullback = app.add_subcommand("pullback", "Pull data back along a morphism");
  pullback->add_option("what", pullback_what, "function, bundle or curvature")
      ->required()
      ->check(CLI::IsMember({"function", "bundle", "curvature"}));
  pullback->add_option("--morphism", morphism_path, "skeleton_morphism document")
      ->required();
  pullback->add_option("--function", function_path, "simple_function on the target");
  pullback->add_option("--bundle", bundle_path, "metrized_bundle on the target");
  pullback->callback([&] {
    const SkeletonMorphism f = load_morphism(morphism_path, "--morphism");
    if (pullback_what == "function") {
      if (function_path.empty()) throw UsageError("pullback function needs --function");
      const SimpleFunction phi = make_simple_function(
          *f.target(), load_function_values(function_path, "--function"));
      std::cout << serialize_document(FunctionDoc{pullback_function(f, phi).values});
      return;
    }
    if (bundle_path.empty())
      throw UsageError("pullback " + pullback_what + " needs --bundle");
    const MetrizedBundle bundle =
        validate_metrization(f.target(), load_germs(bundle_path, "--bundle"));
    if (pullback_what == "bundle") {
      std::cout << serialize_document(BundleDoc{pullback_bundle(f, bundle).germs()});
      return;
    }
    print_curvature(*f.source(), pullback_curvature(f, curvature(bundle)));
  });

  auto* functorial = app.add_subcommand(
      "check-functoriality",
      "Derivative respectively curvature naturality of a pullback");
  functorial->add_option("--morphism", morphism_path, "skeleton_morphism document")
      ->required();
  functorial->add_option("--function", function_path, "simple_function on the target");
  functorial->add_option("--bundle", bundle_path, "metrized_bundle on the target");
  functorial->callback([&] {
    const SkeletonMorphism f = load_morphism(morphism_path, "--morphism");
    if (function_path.empty() == bundle_path.empty())
      throw UsageError("check-functoriality needs exactly one of --function, --bundle");
    bool holds = false;
    if (!function_path.empty()) {
      holds = check_derivative_functoriality(
          f, make_simple_function(*f.target(),
                                  load_function_values(function_path, "--function")));
    } else {
      holds = check_curvature_functoriality(
          f, validate_metrization(f.target(), load_germs(bundle_path, "--bundle")));
    }
    std::cout << std::boolalpha << holds << "\n";
  });

  auto* degree_cmd = app.add_subcommand("degree", "Degree of a cocycle on a skeleton");
  degree_cmd->add_option("--skeleton", skeleton_path, "curve_skeleton document")
      ->required();
  degree_cmd->add_option("--cocycle", cocycle_path, "cocycle document")->required();
  degree_cmd->callback([&] {
    const CurveSkeleton sk = load_skeleton(skeleton_path, "--skeleton");
    const Cocycle cocycle = load_cocycle(cocycle_path, "--cocycle");
    validate_cocycle(sk, cocycle);
    std::cout << rat_to_string(degree(sk, cocycle)) << "\n";
  });

  auto* h1_cmd = app.add_subcommand(
      "h1", "Rank data of the difference map on a skeleton cover");
  h1_cmd->add_option("--skeleton", skeleton_path, "curve_skeleton document")->required();
  h1_cmd->callback([&] {
    const CechReport report = h1_dimension(load_skeleton(skeleton_path, "--skeleton"));
    std::cout << "h1=" << report.h1 << " kernel=" << report.kernel_dim
              << " rank=" << report.rank << "\n";
  });

  auto* reorder_cmd = app.add_subcommand(
      "reorder-check", "Degree invariance under a change of vertex order");
  reorder_cmd->add_option("--skeleton", skeleton_path, "curve_skeleton document")
      ->required();
  reorder_cmd->add_option("--cocycle", cocycle_path, "cocycle document")->required();
  reorder_cmd->add_option("--order", order_text, "new vertex order, comma separated ids")
      ->required();
  reorder_cmd->callback([&] {
    const CurveSkeleton sk = load_skeleton(skeleton_path, "--skeleton");
    const Cocycle cocycle = load_cocycle(cocycle_path, "--cocycle");
    validate_cocycle(sk, cocycle);
    const std::vector<int> order = parse_int_list(order_text, "--order");
    const auto [reordered_sk, reordered_cocycle] = reorder(sk, cocycle, order);
    const Rat before = degree(sk, cocycle);
    const Rat after = degree(reordered_sk, reordered_cocycle);
    std::cout << "degree=" << rat_to_string(before) << "\n"
              << "reordered_degree=" << rat_to_string(after) << "\n"
              << "invariant=" << std::boolalpha << (before == after) << "\n";
  });

  auto* metr_degree = app.add_subcommand(
      "metrization-degree", "Degree of a metrized bundle on a skeleton");
  metr_degree->add_option("--skeleton", skeleton_path, "curve_skeleton document")
      ->required();
  metr_degree->add_option("--bundle", bundle_path, "metrized_bundle document")->required();
  metr_degree->callback([&] {
    const CurveSkeleton sk = load_skeleton(skeleton_path, "--skeleton");
    const MetrizedBundle bundle =
        validate_metrization(sk.complex(), load_germs(bundle_path, "--bundle"));
    std::cout << rat_to_string(curvature_degree(sk, bundle)) << "\n";
  });

  auto add_instance_options = [&](CLI::App* cmd) {
    cmd->add_option("--components", enum_opts.components, "number of component labels")
        ->required();
    cmd->add_option("--bounds", enum_opts.bounds, "copy bounds, comma separated")
        ->required();
    cmd->add_option("--g,--genus", enum_opts.genus, "target genus")->required();
    cmd->add_option("--n,--marks", enum_opts.marks, "target mark count")->required();
  };

  auto* enum_cmd = app.add_subcommand(
      "enum-decomp", "Stream every decomposition of the given type, one per line");
  add_instance_options(enum_cmd);
  enum_cmd->add_flag("--canonical", canonical_only,
                     "keep only representatives that are least in their relabeling class");
  enum_cmd->add_flag("--count", count_only, "print only the number of records");
  enum_cmd->callback([&] {
    long long emitted = 0;
    enumerate_data(make_instance(enum_opts), [&](const DecompositionDatum& datum) {
      if (canonical_only && !is_canonical(datum)) return;
      if (count_only)
        ++emitted;
      else
        std::cout << decomp_record_line(datum) << "\n";
    });
    if (count_only) std::cout << emitted << "\n";
  });

  auto* count_cmd =
      app.add_subcommand("count-decomp", "Count decompositions of the given type");
  add_instance_options(count_cmd);
  count_cmd->callback(
      [&] { std::cout << count_data(make_instance(enum_opts)) << "\n"; });

  auto* canon_cmd = app.add_subcommand(
      "canonical-decomp", "Least relabeling of a decomposition datum");
  canon_cmd->add_option("--input", input_path, "decomposition document")->required();
  canon_cmd->callback([&] {
    const Document doc = load_document_file(input_path);
    const DecompDoc& dd = expect_kind<DecompDoc>(doc, "--input", "decomposition");
    std::cout << serialize_document(DecompDoc{canonicalize(dd.datum)});
  });

  auto* render = app.add_subcommand("render", "Graphviz form of a skeleton or datum");
  render->add_option("--input", input_path, "curve_skeleton or decomposition document")
      ->required();
  render->add_option("--cocycle", cocycle_path, "cocycle document for edge labels");
  render->callback([&] {
    const Document doc = load_document_file(input_path);
    if (const auto* sd = std::get_if<SkeletonDoc>(&doc)) {
      std::optional<Cocycle> labels;
      if (!cocycle_path.empty()) {
        labels = load_cocycle(cocycle_path, "--cocycle");
        validate_cocycle(sd->skeleton, *labels);
      }
      std::cout << render_skeleton_dot(sd->skeleton, labels);
      return;
    }
    if (const auto* dd = std::get_if<DecompDoc>(&doc)) {
      if (!cocycle_path.empty())
        throw UsageError("--cocycle only applies to curve_skeleton documents");
      std::cout << render_decomp_dot(dd->datum);
      return;
    }
    throw UsageError("--input must name a curve_skeleton or decomposition document");
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const skel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
