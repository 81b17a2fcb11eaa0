#include "colorful/colorful.hpp"

#include <algorithm>
#include <map>

#include "colorful/error.hpp"

namespace colorful {

Face face(const EdgeColoredGraph& g, ColorSet C, int v) {
  // BFS over edges colored from C, tracking the minimum vertex reached.
  std::vector<int> colors = C.to_vector();
  std::vector<char> seen(g.num_vertices, 0);
  std::vector<int> queue{v};
  seen[v] = 1;
  int rep = v;
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    rep = std::min(rep, u);
    for (int c : colors) {
      int w = g.neighbor(u, c);
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }
  return Face{C, rep};
}

bool face_leq(const EdgeColoredGraph& g, const Face& f, const Face& upper) {
  if (!f.colors.subset_of(upper.colors)) return false;
  return face(g, upper.colors, f.rep).rep == upper.rep;
}

int ColorfulPoset::face_index(const Face& f) const {
  const auto& keys = face_keys[f.colors.size()];
  auto it = std::lower_bound(keys.begin(), keys.end(), f);
  if (it == keys.end() || !(*it == f))
    throw DomainError(ErrorCode::NotAPolytope, "face key not present in polytope");
  return static_cast<int>(it - keys.begin());
}

int ColorfulPoset::flat_index(const Face& f) const {
  return poset.face_offset(f.colors.size()) + face_index(f);
}

ColorfulPoset build_poset(const EdgeColoredGraph& g, std::uint64_t max_faces) {
  int r = g.num_colors;
  if (r > 20)
    throw DomainError(ErrorCode::ScaleExceeded,
                      "2^" + std::to_string(r) + " color subsets exceed any face budget");

  // Enumerate subsets by cardinality; reps per subset are reused for covers.
  std::vector<std::vector<std::uint64_t>> subsets_by_rank(r + 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask)
    subsets_by_rank[std::popcount(mask)].push_back(mask);

  ColorfulPoset cp;
  cp.graph = g;
  cp.face_keys.assign(r + 1, {});

  std::map<std::uint64_t, std::vector<int>> reps_prev, reps_cur;
  std::vector<std::vector<std::vector<int>>> covers(r + 1);
  std::uint64_t total = 0;

  for (int j = 0; j <= r; ++j) {
    reps_prev = std::move(reps_cur);
    reps_cur.clear();
    // Faces of rank j, ordered by (C, rep).
    std::vector<std::pair<Face, std::vector<int>>> layer;  // face + its cover list
    for (std::uint64_t mask : subsets_by_rank[j]) {
      ColorSet C(mask);
      std::vector<int> rep = component_reps(g, C);
      std::vector<int> distinct;
      for (int v = 0; v < g.num_vertices; ++v)
        if (rep[v] == v) distinct.push_back(v);
      total += distinct.size();
      if (total > max_faces)
        throw DomainError(ErrorCode::ScaleExceeded,
                          "face budget " + std::to_string(max_faces) + " exceeded");
      // Covers: for each color removed from C, the sub-classes inside this class.
      std::map<int, std::vector<int>> covers_of_rep;
      if (j > 0) {
        for (int c : C.to_vector()) {
          const std::vector<int>& sub = reps_prev.at(mask & ~(std::uint64_t{1} << c));
          // Face index of (C\{c}, w) within the previous rank.
          for (int v = 0; v < g.num_vertices; ++v)
            if (sub[v] == v) {
              Face key{C.without(c), v};
              const auto& keys = cp.face_keys[j - 1];
              auto it = std::lower_bound(keys.begin(), keys.end(), key);
              covers_of_rep[rep[v]].push_back(static_cast<int>(it - keys.begin()));
            }
        }
      }
      for (int v : distinct) {
        auto& list = covers_of_rep[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        layer.emplace_back(Face{C, v}, std::move(list));
      }
      reps_cur.emplace(mask, std::move(rep));
    }
    // Subsets were produced in ascending mask order and reps ascend within
    // each subset, so the layer is already sorted by (C, rep).
    covers[j].reserve(layer.size());
    cp.face_keys[j].reserve(layer.size());
    for (auto& [key, cover_list] : layer) {
      cp.face_keys[j].push_back(key);
      covers[j].push_back(std::move(cover_list));
    }
  }
  cp.poset = RankedPoset(r, std::move(covers));
  return cp;
}

std::uint64_t color_flag_count(const EdgeColoredGraph& g) {
  std::uint64_t factorial = 1;
  for (int i = 2; i <= g.num_colors; ++i) factorial *= i;
  return factorial * g.num_vertices;
}

std::vector<ColorFlag> color_flags(const EdgeColoredGraph& g, std::uint64_t max_flags) {
  if (g.num_colors > 20 || color_flag_count(g) > max_flags)
    throw DomainError(ErrorCode::ScaleExceeded, "flag budget exceeded");
  std::vector<ColorFlag> out;
  out.reserve(color_flag_count(g));
  Perm order = identity_perm(g.num_colors);
  for (int v = 0; v < g.num_vertices; ++v) {
    Perm p = order;
    do {
      out.push_back(ColorFlag{v, p});
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return out;
}

ColorFlag color_flag_adjacent(const EdgeColoredGraph& g, const ColorFlag& f, int j) {
  ColorFlag adj = f;
  if (j == 0) {
    adj.vertex = g.neighbor(f.vertex, f.order[0]);
  } else {
    std::swap(adj.order[j - 1], adj.order[j]);
  }
  return adj;
}

ChainFlag chain_of(const ColorfulPoset& cp, const ColorFlag& f) {
  int r = cp.graph.num_colors;
  ChainFlag chain(r + 1);
  ColorSet C;
  chain[0] = cp.face_index(face(cp.graph, C, f.vertex));
  for (int j = 1; j <= r; ++j) {
    C = C.with(f.order[j - 1]);
    chain[j] = cp.face_index(face(cp.graph, C, f.vertex));
  }
  return chain;
}

std::vector<GraphFacet> facets(const EdgeColoredGraph& g) {
  std::vector<GraphFacet> out;
  for (int b = 0; b < g.num_colors; ++b) {
    ColorDeletion deletion = delete_color(g, b);
    for (std::size_t i = 0; i < deletion.components.size(); ++i)
      out.push_back(GraphFacet{b, std::move(deletion.components[i]),
                               std::move(deletion.original_vertices[i])});
  }
  return out;
}

bool vertex_figure_check(const EdgeColoredGraph& g, int v) {
  int r = g.num_colors;
  if (r > 20) throw DomainError(ErrorCode::ScaleExceeded, "vertex figure too large");
  std::vector<Face> above;
  above.reserve(std::size_t{1} << r);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask)
    above.push_back(face(g, ColorSet(mask), v));
  // Distinct as faces, and ordered exactly like subset containment.
  for (std::uint64_t a = 0; a < above.size(); ++a)
    for (std::uint64_t b = 0; b < above.size(); ++b) {
      bool subset = (a & ~b) == 0;
      if (face_leq(g, above[a], above[b]) != subset) return false;
      if (a != b && above[a] == above[b]) return false;
    }
  return true;
}

std::vector<TwoFace> two_faces(const EdgeColoredGraph& g) {
  std::vector<TwoFace> out;
  for (int c1 = 0; c1 < g.num_colors; ++c1)
    for (int c2 = c1 + 1; c2 < g.num_colors; ++c2) {
      ColorSet C = ColorSet::single(c1).with(c2);
      for (const auto& members : partition_classes(g, C))
        out.push_back(TwoFace{c1, c2, members[0], static_cast<int>(members.size())});
    }
  return out;
}

}  // namespace colorful
