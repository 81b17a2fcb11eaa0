// Command line front end: every subcommand is a thin adapter over the
// library, with deterministic text output and optional JSON.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "colorful/autgroup.hpp"
#include "colorful/cayley.hpp"
#include "colorful/colorful.hpp"
#include "colorful/ecgraph.hpp"
#include "colorful/error.hpp"
#include "colorful/flagpoly.hpp"
#include "colorful/monodromy.hpp"
#include "colorful/poset.hpp"
#include "colorful/topology.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace colorful;

struct CommonOpts {
  std::string input;
  std::string output;
  bool as_json = false;
  std::uint64_t max_faces = 1000000;
  std::uint64_t max_group_order = 100000;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true) {
  if (with_input) cmd->add_option("input", opts.input, "input file")->required();
  cmd->add_option("-o,--output", opts.output, "write output to a file instead of stdout");
  cmd->add_flag("--json", opts.as_json, "emit a single JSON object");
  cmd->add_option("--max-faces", opts.max_faces, "face budget for polytope construction");
  cmd->add_option("--max-group-order", opts.max_group_order,
                  "budget for group enumeration and Cayley graphs");
  cmd->add_option("--threads", opts.threads, "worker threads (output is identical for any value)")
      ->check(CLI::PositiveNumber);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("input", "cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output, std::ios::binary);
  if (!out) throw CLI::ValidationError("output", "cannot write file '" + opts.output + "'");
  out << text;
}

bool looks_like_poset(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok) return tok == "rank";
  }
  return false;
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + std::to_string(values[i]);
  return out;
}

// ---- validate ----------------------------------------------------------

int run_validate(const CommonOpts& opts, bool as_poset) {
  std::string text = read_file(opts.input);
  std::string out;
  json j;
  if (!as_poset) {
    EdgeColoredGraph g = parse_graph(text);
    if (opts.as_json) {
      j = {{"vertices", g.num_vertices},
           {"edges", g.edges().size()},
           {"colors", g.num_colors},
           {"valid", true}};
      emit(opts, j.dump() + "\n");
    } else {
      out += "vertices: " + std::to_string(g.num_vertices) + "\n";
      out += "edges: " + std::to_string(g.edges().size()) + "\n";
      out += "colors: " + std::to_string(g.num_colors) + "\n";
      out += "valid: yes\n";
      emit(opts, out);
    }
    return 0;
  }
  RankedPoset p = parse_poset(text);
  PolytopeReport report = validate_polytope(p, static_cast<int>(opts.max_faces));
  auto verdict = [](bool ok) { return ok ? "pass" : "fail"; };
  if (opts.as_json) {
    j = {{"rank", p.rank()},
         {"f_vector", p.f_vector()},
         {"unique_min_max", report.unique_min_max},
         {"rank_chains", report.rank_chains},
         {"diamond", report.diamond},
         {"strong_flag_connected", report.strongly_flag_connected},
         {"failures", report.failures},
         {"valid", report.valid()}};
    emit(opts, j.dump() + "\n");
  } else {
    out += "rank: " + std::to_string(p.rank()) + "\n";
    out += "f-vector: " + join(p.f_vector()) + "\n";
    out += std::string("unique-min-max: ") + verdict(report.unique_min_max) + "\n";
    out += std::string("rank-chains: ") + verdict(report.rank_chains) + "\n";
    out += std::string("diamond: ") + verdict(report.diamond) + "\n";
    out += std::string("strong-flag-connected: ") + verdict(report.strongly_flag_connected) + "\n";
    for (const std::string& f : report.failures) out += "failure: " + f + "\n";
    out += std::string("valid: ") + (report.valid() ? "yes" : "no") + "\n";
    emit(opts, out);
  }
  if (!report.valid()) {
    std::cout << "ERROR NotAPolytope: "
              << (report.failures.empty() ? "axioms failed" : report.failures.front()) << "\n";
    return 1;
  }
  return 0;
}

// ---- build -------------------------------------------------------------

int run_build(const CommonOpts& opts, bool f_vector_only, bool two_faces_only) {
  EdgeColoredGraph g = parse_graph(read_file(opts.input));
  auto color_pair = [&g](int c1, int c2) {
    return "{" + g.color_names[c1] + "," + g.color_names[c2] + "}";
  };
  if (opts.as_json) {
    ColorfulPoset cp = build_poset(g, opts.max_faces);
    json faces = json::array();
    for (const TwoFace& tf : two_faces(g))
      faces.push_back({{"colors", {g.color_names[tf.c1], g.color_names[tf.c2]}},
                       {"rep", g.vertex_names[tf.rep]},
                       {"size", tf.size}});
    json j = {{"rank", cp.poset.rank()}, {"f_vector", cp.poset.f_vector()}, {"two_faces", faces}};
    emit(opts, j.dump() + "\n");
    return 0;
  }
  std::string out;
  if (f_vector_only || two_faces_only) {
    if (f_vector_only) {
      ColorfulPoset cp = build_poset(g, opts.max_faces);
      out += "f-vector: " + join(cp.poset.f_vector()) + "\n";
    }
    if (two_faces_only)
      for (const TwoFace& tf : two_faces(g))
        out += "two-face " + color_pair(tf.c1, tf.c2) + ": " + std::to_string(tf.size) + "\n";
    emit(opts, out);
    return 0;
  }
  ColorfulPoset cp = build_poset(g, opts.max_faces);
  emit(opts, serialize_poset(cp.poset));
  return 0;
}

// ---- autgroup ----------------------------------------------------------

int run_autgroup(const CommonOpts& opts, bool list_elements) {
  EdgeColoredGraph g = parse_graph(read_file(opts.input));
  auto gamma_c = color_respecting_group(g, opts.max_group_order);
  KappaResult k = kappa(gamma_c, g.num_colors);
  FlagOrbits orbits = flag_orbits(g, gamma_c);
  bool regular = is_regular(g, gamma_c);
  if (opts.as_json) {
    json j = {{"color_respecting", gamma_c.size()},
              {"color_preserving", k.kernel.size()},
              {"kappa_image", k.image_elements.size()},
              {"flag_orbits", orbits.count},
              {"regular", regular}};
    if (list_elements) {
      json elems = json::array();
      for (const auto& aut : gamma_c)
        elems.push_back({{"vertices", aut.vertex_map}, {"colors", aut.color_perm}});
      j["elements"] = elems;
    }
    emit(opts, j.dump() + "\n");
    return 0;
  }
  std::string out;
  out += "color-respecting: " + std::to_string(gamma_c.size()) + "\n";
  out += "color-preserving: " + std::to_string(k.kernel.size()) + "\n";
  out += "kappa-image: " + std::to_string(k.image_elements.size()) + "\n";
  out += "flag-orbits: " + std::to_string(orbits.count) + "\n";
  out += std::string("regular: ") + (regular ? "yes" : "no") + "\n";
  if (list_elements)
    for (const auto& aut : gamma_c)
      out += "element: " + join(aut.vertex_map) + " colors: " + join(aut.color_perm) + "\n";
  emit(opts, out);
  return 0;
}

// ---- facets ------------------------------------------------------------

int run_facets(const CommonOpts& opts) {
  EdgeColoredGraph g = parse_graph(read_file(opts.input));
  std::vector<GraphFacet> all = facets(g);
  if (opts.as_json) {
    json list = json::array();
    int component = 0, last_color = -1;
    for (const GraphFacet& f : all) {
      component = f.color == last_color ? component + 1 : 0;
      last_color = f.color;
      json verts = json::array();
      for (int v : f.vertices) verts.push_back(g.vertex_names[v]);
      list.push_back(
          {{"color", g.color_names[f.color]}, {"component", component}, {"vertices", verts}});
    }
    emit(opts, json{{"facets", list}}.dump() + "\n");
    return 0;
  }
  std::string out;
  int component = 0, last_color = -1;
  for (const GraphFacet& f : all) {
    component = f.color == last_color ? component + 1 : 0;
    last_color = f.color;
    out += "facet " + g.color_names[f.color] + " " + std::to_string(component) + ":";
    for (int v : f.vertices) out += " " + g.vertex_names[v];
    out += "\n";
  }
  emit(opts, out);
  return 0;
}

// ---- flaggraph ---------------------------------------------------------

int run_flaggraph(const CommonOpts& opts, bool as_polytope) {
  RankedPoset p = parse_poset(read_file(opts.input));
  if (as_polytope) {
    ColorfulPoset cp = flag_adjacency_polytope(p, opts.max_faces, opts.max_faces);
    emit(opts, serialize_poset(cp.poset));
    return 0;
  }
  emit(opts, serialize_graph(flag_graph(p, opts.max_faces).graph));
  return 0;
}

// ---- cayley / graphicahedron -------------------------------------------

int run_cayley(const CommonOpts& opts, const std::string& group_spec,
               const std::string& edges_path) {
  GenGroup group;
  if (group_spec.rfind("sp:", 0) == 0) {
    int p = std::stoi(group_spec.substr(3));
    if (edges_path.empty())
      throw CLI::ValidationError("--edges", "sp:<p> needs an edge file for the transpositions");
    SimpleGraph g = parse_simple_graph(read_file(edges_path));
    if (g.num_vertices > p)
      throw CLI::ValidationError("--edges", "edge file uses more vertices than sp:<p> declares");
    g.num_vertices = p;  // allow isolated points only through the declared p
    group = sym_group_transpositions(g);
  } else if (group_spec.rfind("z2n:", 0) == 0) {
    group = elementary_abelian_2(std::stoi(group_spec.substr(4)));
  } else {
    throw CLI::ValidationError("--group", "expected sp:<p> or z2n:<n>");
  }
  CayleyGraph cg = cayley_graph(group, opts.max_group_order);
  emit(opts, serialize_graph(cg.graph));
  return 0;
}

int run_graphicahedron(const CommonOpts& opts) {
  SimpleGraph g = parse_simple_graph(read_file(opts.input));
  CayleyGraph cg = graphicahedron_graph(g, opts.max_group_order);
  emit(opts, serialize_graph(cg.graph));
  return 0;
}

// ---- monodromy ---------------------------------------------------------

int run_monodromy(const CommonOpts& opts, bool emit_cayley) {
  RankedPoset p = parse_poset(read_file(opts.input));
  if (emit_cayley) {
    emit(opts, serialize_graph(monodromy_cayley(p, opts.max_group_order).graph));
    return 0;
  }
  CoveringReport report = covering_map(p, opts.max_group_order, opts.max_faces);
  bool regular = report.monodromy_order == report.flag_count;
  const char* covering = report.isomorphism() ? "isomorphism" : "proper-cover";
  if (opts.as_json) {
    json j = {{"monodromy_order", report.monodromy_order},
              {"flags", report.flag_count},
              {"regular", regular},
              {"covering", covering},
              {"covering_checks", report.all_checks()}};
    emit(opts, j.dump() + "\n");
    return 0;
  }
  std::string out;
  out += "monodromy-order: " + std::to_string(report.monodromy_order) + "\n";
  out += "flags: " + std::to_string(report.flag_count) + "\n";
  out += std::string("regular: ") + (regular ? "yes" : "no") + "\n";
  out += std::string("covering: ") + covering + "\n";
  out += std::string("covering-checks: ") + (report.all_checks() ? "pass" : "fail") + "\n";
  emit(opts, out);
  return 0;
}

// ---- classify ----------------------------------------------------------

int run_classify(const CommonOpts& opts) {
  std::string text = read_file(opts.input);
  RankedPoset p = looks_like_poset(text) ? parse_poset(text)
                                         : build_poset(parse_graph(text), opts.max_faces).poset;
  SurfaceReport report = classify_surface(p);
  SchlafliType type = schlafli_type(p);
  if (opts.as_json) {
    json j = {{"f_vector", report.f_vector},
              {"face_sizes", report.face_sizes},
              {"chi", report.euler},
              {"orientable", report.orientable},
              {"surface", report.surface_name},
              {"type", type.to_string()}};
    emit(opts, j.dump() + "\n");
    return 0;
  }
  std::string out;
  out += "f-vector: " + join(report.f_vector) + "\n";
  out += "face-sizes: " + join(report.face_sizes) + "\n";
  out += "type: " + type.to_string() + "\n";
  out += "surface: " + report.surface_name + " chi=" + std::to_string(report.euler) +
         " orientable=" + (report.orientable ? "yes" : "no") + "\n";
  emit(opts, out);
  return 0;
}

// ---- dot ---------------------------------------------------------------

int run_dot(const CommonOpts& opts) {
  EdgeColoredGraph g = parse_graph(read_file(opts.input));
  emit(opts, to_dot(g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"colorful polytopes of properly edge-colored regular graphs"};
  app.require_subcommand(1);

  CommonOpts opts;
  bool as_poset = false, f_vector_only = false, two_faces_only = false;
  bool list_elements = false, as_polytope = false, emit_cayley = false;
  std::string group_spec, edges_path;

  CLI::App* validate = app.add_subcommand("validate", "validate a colored graph or a polytope");
  add_common(validate, opts);
  validate->add_flag("--polytope", as_poset, "treat input as a polytope file");

  CLI::App* build = app.add_subcommand("build", "build the colorful polytope of a colored graph");
  add_common(build, opts);
  build->add_flag("--f-vector", f_vector_only, "print only face counts per rank");
  build->add_flag("--two-faces", two_faces_only, "print each 2-face as color pair and size");

  CLI::App* autgroup = app.add_subcommand("autgroup", "symmetry groups of a colored graph");
  add_common(autgroup, opts);
  autgroup->add_flag("--elements", list_elements, "list group elements");

  CLI::App* facets_cmd = app.add_subcommand("facets", "facets of the colorful polytope");
  add_common(facets_cmd, opts);

  CLI::App* flaggraph = app.add_subcommand("flaggraph", "flag graph of a polytope");
  add_common(flaggraph, opts);
  flaggraph->add_flag("--polytope", as_polytope, "emit the flag adjacency polytope instead");

  CLI::App* cayley = app.add_subcommand("cayley", "Cayley graph of a group over involutions");
  add_common(cayley, opts, false);
  cayley->add_option("--group", group_spec, "sp:<p> or z2n:<n>")->required();
  cayley->add_option("--edges", edges_path, "edge file (transpositions for sp:<p>)");

  CLI::App* graphicahedron =
      app.add_subcommand("graphicahedron", "Cayley graph of S_p over a graph's transpositions");
  add_common(graphicahedron, opts);

  CLI::App* monodromy = app.add_subcommand("monodromy", "monodromy group and covering checks");
  add_common(monodromy, opts);
  monodromy->add_flag("--emit-cayley", emit_cayley, "emit the monodromy Cayley graph");

  CLI::App* classify = app.add_subcommand("classify", "classify a rank-3 polytope as a surface");
  add_common(classify, opts);

  CLI::App* dot = app.add_subcommand("dot", "DOT export of a colored graph");
  add_common(dot, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return run_validate(opts, as_poset);
    if (build->parsed()) return run_build(opts, f_vector_only, two_faces_only);
    if (autgroup->parsed()) return run_autgroup(opts, list_elements);
    if (facets_cmd->parsed()) return run_facets(opts);
    if (flaggraph->parsed()) return run_flaggraph(opts, as_polytope);
    if (cayley->parsed()) return run_cayley(opts, group_spec, edges_path);
    if (graphicahedron->parsed()) return run_graphicahedron(opts);
    if (monodromy->parsed()) return run_monodromy(opts, emit_cayley);
    if (classify->parsed()) return run_classify(opts);
    if (dot->parsed()) return run_dot(opts);
  } catch (const colorful::DomainError& e) {
    std::cout << "ERROR " << colorful::to_string(e.code()) << ": " << e.detail() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
