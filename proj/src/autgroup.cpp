#include "colorful/autgroup.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "colorful/error.hpp"

namespace colorful {

namespace {

// Extends vertex 0 -> w under color permutation pi by BFS; the proper
// coloring makes the extension unique, so the candidate either works or dies.
bool extend_candidate(const EdgeColoredGraph& from, const EdgeColoredGraph& to, int w,
                      const Perm& pi, Perm& image) {
  image.assign(from.num_vertices, -1);
  image[0] = w;
  std::vector<int> queue{0};
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    for (int c = 0; c < from.num_colors; ++c) {
      int un = from.neighbor(u, c);
      int gn = to.neighbor(image[u], pi[c]);
      if (image[un] == -1) {
        image[un] = gn;
        queue.push_back(un);
      } else if (image[un] != gn) {
        return false;
      }
    }
  }
  // Consistent homomorphism; accept only bijections.
  std::vector<char> hit(to.num_vertices, 0);
  for (int v : image) {
    if (v < 0 || hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

}  // namespace

std::vector<ColorRespectingAut> color_respecting_maps(const EdgeColoredGraph& from,
                                                      const EdgeColoredGraph& to,
                                                      bool identity_colors_only,
                                                      std::uint64_t max_color_perms) {
  std::vector<ColorRespectingAut> out;
  if (from.num_colors != to.num_colors || from.num_vertices != to.num_vertices) return out;
  int r = from.num_colors;
  std::uint64_t factorial = 1;
  for (int i = 2; i <= r; ++i) factorial *= i;
  if (!identity_colors_only && factorial > max_color_perms)
    throw DomainError(ErrorCode::ScaleExceeded,
                      std::to_string(r) + "! color permutations exceed the budget");

  Perm image;
  for (int w = 0; w < to.num_vertices; ++w) {
    Perm pi = identity_perm(r);
    do {
      if (extend_candidate(from, to, w, pi, image))
        out.push_back(ColorRespectingAut{image, pi});
    } while (!identity_colors_only && std::next_permutation(pi.begin(), pi.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColorRespectingAut> color_respecting_group(const EdgeColoredGraph& g,
                                                       std::uint64_t max_color_perms) {
  auto out = color_respecting_maps(g, g, false, max_color_perms);
  // Rigidity: fixing a vertex with the identity color permutation forces the
  // identity map, so (0, id) contributes exactly the identity automorphism.
  for (const auto& aut : out)
    if (aut.vertex_map[0] == 0 && is_identity(aut.color_perm) && !is_identity(aut.vertex_map))
      throw DomainError(ErrorCode::NotAPolytope, "rigidity violated in Gamma_c enumeration");
  return out;
}

std::vector<ColorRespectingAut> color_preserving_group(const EdgeColoredGraph& g) {
  return color_respecting_maps(g, g, true);
}

KappaResult kappa(const std::vector<ColorRespectingAut>& group, int num_colors) {
  KappaResult result;
  std::set<Perm> images;
  for (const auto& aut : group) {
    images.insert(aut.color_perm);
    if (is_identity(aut.color_perm)) result.kernel.push_back(aut);
  }
  result.image_elements.assign(images.begin(), images.end());
  result.image = PermGroup(num_colors, result.image_elements);
  if (result.kernel.size() * result.image_elements.size() != group.size())
    throw DomainError(ErrorCode::NotAPolytope,
                      "|Gamma_c| != |ker kappa| * |im kappa| on this instance");
  return result;
}

Perm lift_to_polytope(const ColorRespectingAut& aut, const ColorfulPoset& cp) {
  const EdgeColoredGraph& g = cp.graph;
  Perm flat(cp.poset.total_faces());
  for (int j = 0; j <= g.num_colors; ++j) {
    int off = cp.poset.face_offset(j);
    for (int k = 0; k < cp.poset.num_faces(j); ++k) {
      const Face& f = cp.face_keys[j][k];
      std::uint64_t mapped_colors = 0;
      for (int c : f.colors.to_vector())
        mapped_colors |= std::uint64_t{1} << aut.color_perm[c];
      Face image = face(g, ColorSet(mapped_colors), aut.vertex_map[f.rep]);
      flat[off + k] = cp.flat_index(image);
    }
  }
  return flat;
}

namespace {

std::uint64_t perm_rank(const Perm& p) {
  // Lexicographic rank via the factorial number system.
  int n = static_cast<int>(p.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller;
    std::uint64_t factorial = 1;
    for (int k = 2; k <= n - 1 - i; ++k) factorial *= k;
    rank += smaller * factorial;
  }
  return rank;
}

}  // namespace

FlagOrbits flag_orbits(const EdgeColoredGraph& g, const std::vector<ColorRespectingAut>& auts) {
  std::uint64_t count = color_flag_count(g);
  if (count > 1000000) throw DomainError(ErrorCode::ScaleExceeded, "too many flags");
  std::uint64_t factorial = count / std::max(1, g.num_vertices);

  std::vector<ColorFlag> all = color_flags(g);
  auto index_of = [&](const ColorFlag& f) {
    return static_cast<std::size_t>(f.vertex) * factorial + perm_rank(f.order);
  };

  // Union-find over flag indices under the full group action.
  std::vector<int> parent(count);
  for (std::size_t i = 0; i < count; ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& aut : auts)
    for (std::size_t i = 0; i < all.size(); ++i) {
      ColorFlag image{aut.vertex_map[all[i].vertex], compose(aut.color_perm, all[i].order)};
      int a = find(static_cast<int>(i)), b = find(static_cast<int>(index_of(image)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  FlagOrbits orbits;
  orbits.orbit_of.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    int root = find(static_cast<int>(i));
    orbits.orbit_of[i] = root;
    if (root == static_cast<int>(i)) orbits.representatives.push_back(root);
  }
  orbits.count = static_cast<int>(orbits.representatives.size());
  return orbits;
}

bool is_regular(const EdgeColoredGraph& g, const std::vector<ColorRespectingAut>& auts) {
  bool transitive_on_flags = flag_orbits(g, auts).count == 1;

  // Independent route: vertex transitivity plus a vertex stabilizer acting
  // as the full symmetric group on the colors.
  std::vector<char> vertex_orbit(g.num_vertices, 0);
  std::set<Perm> stabilizer_colors;
  for (const auto& aut : auts) {
    vertex_orbit[aut.vertex_map[0]] = 1;
    if (aut.vertex_map[0] == 0) stabilizer_colors.insert(aut.color_perm);
  }
  bool vertex_transitive =
      std::count(vertex_orbit.begin(), vertex_orbit.end(), 1) == g.num_vertices;
  std::uint64_t factorial = 1;
  for (int i = 2; i <= g.num_colors; ++i) factorial *= i;
  bool stabilizer_symmetric = stabilizer_colors.size() == factorial;

  if (transitive_on_flags != (vertex_transitive && stabilizer_symmetric))
    throw DomainError(ErrorCode::NotAPolytope, "regularity criteria disagree on this instance");
  return transitive_on_flags;
}

}  // namespace colorful
