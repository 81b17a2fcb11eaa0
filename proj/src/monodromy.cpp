#include "colorful/monodromy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "colorful/autgroup.hpp"
#include "colorful/error.hpp"
#include "colorful/flagpoly.hpp"

namespace colorful {

MonodromyGroup monodromy_group(const RankedPoset& p, std::uint64_t max_flags) {
  int n = p.rank();
  if (n < 1) throw DomainError(ErrorCode::NotAPolytope, "monodromy needs rank >= 1");
  MonodromyGroup mono;
  mono.flags = flags(p);
  mono.flag_count = static_cast<int>(mono.flags.size());
  if (mono.flags.size() > max_flags)
    throw DomainError(ErrorCode::ScaleExceeded, "flag budget exceeded");

  std::map<ChainFlag, int> id_of;
  for (int i = 0; i < mono.flag_count; ++i) id_of[mono.flags[i]] = i;

  for (int i = 0; i < n; ++i) {
    Perm s(mono.flag_count);
    for (int f = 0; f < mono.flag_count; ++f) s[f] = id_of.at(flag_adjacent(p, mono.flags[f], i));
    for (int f = 0; f < mono.flag_count; ++f)
      if (s[f] == f || s[s[f]] != f)
        throw DomainError(ErrorCode::NotAPolytope,
                          "s_" + std::to_string(i) + " is not a fixed-point-free involution");
    mono.generators.push_back(std::move(s));
  }
  // Universal relations: far-apart generators commute.
  for (int i = 0; i + 2 < n + 1; ++i)
    for (int j = i + 2; j < n; ++j) {
      Perm ab = compose(mono.generators[i], mono.generators[j]);
      if (!is_identity(compose(ab, ab)))
        throw DomainError(ErrorCode::NotAPolytope,
                          "(s_" + std::to_string(i) + " s_" + std::to_string(j) +
                              ")^2 is not the identity");
    }
  mono.group = PermGroup(mono.flag_count, mono.generators);
  if (mono.group.orbits().size() != 1)
    throw DomainError(ErrorCode::NotAPolytope, "monodromy action is not transitive on flags");
  mono.base_flag = 0;
  return mono;
}

CayleyGraph monodromy_cayley(const RankedPoset& p, std::uint64_t max_vertices) {
  MonodromyGroup mono = monodromy_group(p);
  GenGroup G;
  G.degree = mono.flag_count;
  G.generators = mono.generators;
  G.right_action = true;  // elements realize Psi -> Psi . w
  for (int i = 0; i < p.rank(); ++i) G.generator_names.push_back(std::to_string(i));
  G.element_name = [](const Perm&, int id) { return "w" + std::to_string(id); };
  CayleyGraph cg = cayley_graph(G, max_vertices);
  if (mono.group.order() != cg.elements.size())
    throw DomainError(ErrorCode::NotAPolytope,
                      "stabilizer-chain order disagrees with the enumerated group");
  return cg;
}

ColorfulPoset monodromy_polytope(const RankedPoset& p, std::uint64_t max_vertices,
                                 std::uint64_t max_faces) {
  return build_poset(monodromy_cayley(p, max_vertices).graph, max_faces);
}

QuotientResult quotient_by_stabilizer(const RankedPoset& p, std::uint64_t max_vertices) {
  CayleyGraph cg = monodromy_cayley(p, max_vertices);
  const int base = 0;  // lexicographically least flag of p
  int count = static_cast<int>(cg.elements.size());

  std::vector<int> stabilizer;
  for (int h = 0; h < count; ++h)
    if (cg.elements[h][base] == base) stabilizer.push_back(h);

  QuotientResult result;
  result.stabilizer_order = stabilizer.size();
  result.coset_of_vertex.assign(count, -1);
  int num_cosets = 0;
  for (int u = 0; u < count; ++u) {
    if (result.coset_of_vertex[u] != -1) continue;
    for (int h : stabilizer) {
      int member = cg.element_id(cg.group.mul(cg.elements[u], cg.elements[h]));
      if (result.coset_of_vertex[member] != -1 && result.coset_of_vertex[member] != num_cosets)
        throw DomainError(ErrorCode::NotAPolytope, "coset partition is inconsistent");
      result.coset_of_vertex[member] = num_cosets;
    }
    ++num_cosets;
  }

  // Inherited edge coloring must be well-defined; any conflict is a hard
  // failure, not a warning.
  std::map<std::pair<int, int>, int> edge_color;
  for (const auto& e : cg.graph.edges()) {
    int cu = result.coset_of_vertex[e.u], cv = result.coset_of_vertex[e.v];
    if (cu == cv)
      throw DomainError(ErrorCode::NotAPolytope, "quotient has a loop, s_i u lies in uH");
    auto key = std::minmax(cu, cv);
    auto [it, fresh] = edge_color.emplace(key, e.color);
    if (!fresh && it->second != e.color)
      throw DomainError(ErrorCode::NotAPolytope, "quotient edge coloring is not well-defined");
  }
  std::vector<EdgeList> edges;
  for (const auto& [pair, color] : edge_color) edges.push_back({pair.first, pair.second, color});
  std::vector<std::string> names;
  for (int c = 0; c < num_cosets; ++c) names.push_back("q" + std::to_string(c));
  result.quotient = build_graph(num_cosets, cg.graph.num_colors, edges, std::move(names),
                                cg.graph.color_names);

  // phi(uH) = Phi . u^{-1}, checked to be a color preserving isomorphism
  // onto the flag graph.
  FlagGraphResult fg = flag_graph(p);
  result.phi.assign(num_cosets, -1);
  for (int u = 0; u < count; ++u) {
    int image = inverse(cg.elements[u])[base];
    int coset = result.coset_of_vertex[u];
    if (result.phi[coset] == -1)
      result.phi[coset] = image;
    else if (result.phi[coset] != image)
      throw DomainError(ErrorCode::NotAPolytope, "phi is not constant on a coset");
  }
  result.iso_verified = num_cosets == fg.graph.num_vertices;
  std::vector<char> hit(fg.graph.num_vertices, 0);
  for (int c = 0; c < num_cosets && result.iso_verified; ++c) {
    if (hit[result.phi[c]]) result.iso_verified = false;
    hit[result.phi[c]] = 1;
  }
  for (int c = 0; c < num_cosets && result.iso_verified; ++c)
    for (int i = 0; i < result.quotient.num_colors && result.iso_verified; ++i) {
      int d = result.quotient.neighbor(c, i);
      if (fg.graph.neighbor(result.phi[c], i) != result.phi[d]) result.iso_verified = false;
    }
  return result;
}

CoveringReport covering_map(const RankedPoset& p, std::uint64_t max_vertices,
                            std::uint64_t max_faces) {
  CayleyGraph cg = monodromy_cayley(p, max_vertices);
  QuotientResult quotient = quotient_by_stabilizer(p, max_vertices);
  if (!quotient.iso_verified)
    throw DomainError(ErrorCode::NotAPolytope, "quotient is not isomorphic to the flag graph");
  FlagGraphResult fg = flag_graph(p);

  CoveringReport report;
  report.monodromy_order = cg.elements.size();
  report.flag_count = fg.graph.num_vertices;

  // Vertex-level map psi: M -> flag graph.
  std::vector<int> psi(cg.graph.num_vertices);
  for (int u = 0; u < cg.graph.num_vertices; ++u)
    psi[u] = quotient.phi[quotient.coset_of_vertex[u]];

  // gamma preserves flag adjacency iff psi is a color preserving graph
  // homomorphism: j >= 1 adjacencies keep the vertex, j = 0 walks an edge.
  report.flag_adjacency_preserving = true;
  for (int u = 0; u < cg.graph.num_vertices; ++u)
    for (int c = 0; c < cg.graph.num_colors; ++c)
      if (psi[cg.graph.neighbor(u, c)] != fg.graph.neighbor(psi[u], c))
        report.flag_adjacency_preserving = false;

  ColorfulPoset mono_poly = build_poset(cg.graph, max_faces);
  ColorfulPoset flag_poly = build_poset(fg.graph, max_faces);

  int n = p.rank();
  report.rank_preserving = true;
  report.surjective = true;
  report.incidence_preserving = true;

  // gamma on faces: (C, rep) -> (C, psi(rep)), canonicalized in P_G.
  std::vector<std::vector<int>> image(n + 1);
  for (int j = 0; j <= n; ++j) {
    image[j].resize(mono_poly.poset.num_faces(j));
    std::set<int> hit;
    for (int k = 0; k < mono_poly.poset.num_faces(j); ++k) {
      const Face& f = mono_poly.face_keys[j][k];
      Face mapped = face(fg.graph, f.colors, psi[f.rep]);
      if (mapped.colors.size() != j) report.rank_preserving = false;
      image[j][k] = flag_poly.face_index(mapped);
      hit.insert(image[j][k]);
    }
    if (static_cast<int>(hit.size()) != flag_poly.poset.num_faces(j)) report.surjective = false;
  }
  for (int j = 1; j <= n; ++j)
    for (int k = 0; k < mono_poly.poset.num_faces(j); ++k)
      for (int idx : mono_poly.poset.covers_of(j, k)) {
        const Face& low = flag_poly.face_keys[j - 1][image[j - 1][idx]];
        const Face& high = flag_poly.face_keys[j][image[j][k]];
        if (!face_leq(fg.graph, low, high)) report.incidence_preserving = false;
      }

  report.injective = cg.graph.num_vertices == fg.graph.num_vertices;
  return report;
}

ReversalReport generator_reversal_automorphism(const RankedPoset& p,
                                               std::uint64_t max_vertices) {
  if (!layer_hypothesis(p))
    throw DomainError(ErrorCode::HypothesisViolated,
                      "some face layer graph is complete bipartite");
  CayleyGraph cg = monodromy_cayley(p, max_vertices);
  int n = p.rank();

  ReversalReport report;
  report.monodromy_order = cg.elements.size();
  std::vector<GenSetAut> auts = aut_gamma_T(cg);
  Perm reversal(n);
  for (int i = 0; i < n; ++i) reversal[i] = n - 1 - i;
  for (const auto& aut : auts) {
    if (aut.subscript_perm == reversal && !is_identity(reversal)) report.exists = true;
    if (!is_identity(aut.subscript_perm) && aut.subscript_perm != reversal)
      throw DomainError(ErrorCode::NotAPolytope,
                        "generator permutation other than reversal extends");
  }
  if (n == 1) report.exists = false;  // reversal is the identity

  report.gamma_c_M_order = color_respecting_group(cg.graph).size();
  std::uint64_t expected = report.monodromy_order * (report.exists ? 2 : 1);
  if (report.gamma_c_M_order != expected)
    throw DomainError(ErrorCode::NotAPolytope,
                      "|Gamma_c(M)| = " + std::to_string(report.gamma_c_M_order) +
                          ", expected " + std::to_string(expected));
  return report;
}

}  // namespace colorful
