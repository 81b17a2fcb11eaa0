#include "colorful/flagpoly.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "colorful/error.hpp"

namespace colorful {

FlagGraphResult flag_graph(const RankedPoset& p, std::uint64_t max_flags) {
  int n = p.rank();
  if (n < 1) throw DomainError(ErrorCode::NotAPolytope, "flag graph needs rank >= 1");
  FlagGraphResult result;
  result.flag_of_vertex = flags(p);
  if (result.flag_of_vertex.size() > max_flags)
    throw DomainError(ErrorCode::ScaleExceeded, "flag budget exceeded");

  std::map<ChainFlag, int> id_of;
  for (std::size_t i = 0; i < result.flag_of_vertex.size(); ++i)
    id_of[result.flag_of_vertex[i]] = static_cast<int>(i);

  std::vector<EdgeList> edges;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < result.flag_of_vertex.size(); ++i) {
    const ChainFlag& f = result.flag_of_vertex[i];
    std::string name;
    for (int j = 0; j < n; ++j) name += (j ? "." : "") + std::to_string(f[j]);
    names.push_back(std::move(name));
    for (int c = 0; c < n; ++c) {
      int other = id_of.at(flag_adjacent(p, f, c));
      if (static_cast<int>(i) < other) edges.push_back({static_cast<int>(i), other, c});
    }
  }
  std::vector<std::string> color_names;
  for (int c = 0; c < n; ++c) color_names.push_back(std::to_string(c));
  result.graph = build_graph(static_cast<int>(result.flag_of_vertex.size()), n, edges,
                             std::move(names), std::move(color_names));
  return result;
}

ColorfulPoset flag_adjacency_polytope(const RankedPoset& p, std::uint64_t max_flags,
                                      std::uint64_t max_faces) {
  return build_poset(flag_graph(p, max_flags).graph, max_faces);
}

bool layer_hypothesis(const RankedPoset& p) {
  for (int i = 0; i + 2 <= p.rank(); ++i)
    if (is_complete_bipartite(face_layer_graph(p, i))) return false;
  return true;
}

Perm automorphism_on_flags(const RankedPoset& p, const std::vector<ChainFlag>& all_flags,
                           const Perm& face_map) {
  std::map<ChainFlag, int> id_of;
  for (std::size_t i = 0; i < all_flags.size(); ++i) id_of[all_flags[i]] = static_cast<int>(i);
  Perm out(all_flags.size());
  for (std::size_t i = 0; i < all_flags.size(); ++i) {
    ChainFlag image(p.rank() + 1);
    for (int j = 0; j <= p.rank(); ++j)
      image[j] = face_map[p.face_offset(j) + all_flags[i][j]] - p.face_offset(j);
    out[i] = id_of.at(image);
  }
  return out;
}

Perm duality_on_flags(const RankedPoset& p, const std::vector<ChainFlag>& all_flags,
                      const Perm& duality_map) {
  int n = p.rank();
  std::map<ChainFlag, int> id_of;
  for (std::size_t i = 0; i < all_flags.size(); ++i) id_of[all_flags[i]] = static_cast<int>(i);
  Perm out(all_flags.size());
  for (std::size_t i = 0; i < all_flags.size(); ++i) {
    ChainFlag image(n + 1);
    image[n] = 0;  // the unique top face
    for (int j = 0; j <= n - 1; ++j) {
      int mapped = duality_map[p.face_offset(n - 1 - j) + all_flags[i][n - 1 - j]];
      image[j] = mapped - p.face_offset(j);
    }
    out[i] = id_of.at(image);
  }
  return out;
}

ExtendedGroupReport extended_group(const RankedPoset& p) {
  ExtendedGroupReport report;
  report.hypothesis = layer_hypothesis(p);

  std::vector<ChainFlag> all_flags = flags(p);
  std::vector<Perm> elements;
  for (const Perm& aut : poset_automorphism_maps(p))
    elements.push_back(automorphism_on_flags(p, all_flags, aut));
  report.automorphism_order = elements.size();
  std::vector<Perm> duals = dualities(p);
  report.duality_count = duals.size();
  for (const Perm& d : duals) elements.push_back(duality_on_flags(p, all_flags, d));
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  report.extended_order = elements.size();
  report.extended_elements = std::move(elements);

  FlagGraphResult fg = flag_graph(p);
  std::vector<ColorRespectingAut> gamma_c = color_respecting_group(fg.graph);
  report.gamma_c_order = gamma_c.size();

  std::vector<Perm> gamma_c_actions;
  for (const auto& aut : gamma_c) gamma_c_actions.push_back(aut.vertex_map);
  std::sort(gamma_c_actions.begin(), gamma_c_actions.end());
  report.equal = gamma_c_actions == report.extended_elements;
  return report;
}

}  // namespace colorful
