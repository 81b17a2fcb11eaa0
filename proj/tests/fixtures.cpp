#include "fixtures.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace colorful;

namespace fixtures {

const char* k4_text =
    "1 2 a\n"
    "3 4 a\n"
    "1 3 b\n"
    "2 4 b\n"
    "1 4 c\n"
    "2 3 c\n";

const char* segment_text = "1 2 a\n";

// Transcription of the 8-vertex graph whose colorful polyhedron lives on the
// Klein bottle: two squares 1-2-3-4 and 1'-2'-3'-4' glued by the red edges
// 3-1' and 1-3'.
const char* fig3_text =
    "2 1 green\n"
    "3 4 green\n"
    "2p 1p green\n"
    "3p 4p green\n"
    "2 4 red\n"
    "2p 4p red\n"
    "3 1p red\n"
    "1 3p red\n"
    "2 3 blue\n"
    "4 1 blue\n"
    "2p 3p blue\n"
    "4p 1p blue\n";

EdgeColoredGraph k4() { return parse_graph(k4_text); }
EdgeColoredGraph segment() { return parse_graph(segment_text); }
EdgeColoredGraph fig3() { return parse_graph(fig3_text); }

EdgeColoredGraph cube_standard() {
  // Vertices are bit triples; the color of an edge is the flipped axis.
  std::vector<EdgeList> edges;
  for (int v = 0; v < 8; ++v)
    for (int axis = 0; axis < 3; ++axis) {
      int w = v ^ (1 << axis);
      if (v < w) edges.push_back({v, w, axis});
    }
  std::vector<std::string> vnames;
  for (int v = 0; v < 8; ++v)
    vnames.push_back({char('0' + ((v >> 2) & 1)), char('0' + ((v >> 1) & 1)),
                      char('0' + (v & 1))});
  return build_graph(8, 3, edges, vnames, {"x", "y", "z"});
}

EdgeColoredGraph cube_torus() {
  // Hamiltonian cycle 000-001-011-010-110-111-101-100 colored a/b
  // alternately; the leftover perfect matching is c.
  const int cyc[8] = {0b000, 0b001, 0b011, 0b010, 0b110, 0b111, 0b101, 0b100};
  std::map<int, int> id;
  std::vector<std::string> vnames;
  for (int i = 0; i < 8; ++i) {
    id[cyc[i]] = i;
    int v = cyc[i];
    vnames.push_back({char('0' + ((v >> 2) & 1)), char('0' + ((v >> 1) & 1)),
                      char('0' + (v & 1))});
  }
  std::vector<EdgeList> edges;
  for (int i = 0; i < 8; ++i) {
    int j = (i + 1) % 8;
    edges.push_back({std::min(i, j), std::max(i, j), i % 2});
  }
  for (auto [a, b] : {std::pair{0b001, 0b101}, std::pair{0b011, 0b111},
                      std::pair{0b000, 0b010}, std::pair{0b100, 0b110}}) {
    int u = id.at(a), v = id.at(b);
    edges.push_back({std::min(u, v), std::max(u, v), 2});
  }
  return build_graph(8, 3, edges, vnames, {"a", "b", "c"});
}

EdgeColoredGraph cycle(int n) {
  std::vector<EdgeList> edges;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    edges.push_back({std::min(i, j), std::max(i, j), i % 2});
  }
  return build_graph(n, 2, edges, {}, {"a", "b"});
}

EdgeColoredGraph k33() {
  SimpleGraph triangle = cycle_graph(3);
  return cayley_graph(sym_group_transpositions(triangle)).graph;
}

SimpleGraph petersen() {
  SimpleGraph g;
  g.num_vertices = 10;
  for (int i = 0; i < 5; ++i) {
    g.edges.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));  // outer C5
    g.edges.emplace_back(i, i + 5);                                            // spokes
    g.edges.emplace_back(std::min(5 + i, 5 + (i + 2) % 5), std::max(5 + i, 5 + (i + 2) % 5));
  }
  for (int v = 0; v < 10; ++v) g.vertex_names.push_back(std::to_string(v));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

SimpleGraph heawood() {
  // 14-cycle plus the chords {i, i+5} for even i.
  SimpleGraph g;
  g.num_vertices = 14;
  for (int i = 0; i < 14; ++i) {
    int j = (i + 1) % 14;
    g.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  for (int i = 0; i < 14; i += 2) {
    int j = (i + 5) % 14;
    g.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  for (int v = 0; v < 14; ++v) g.vertex_names.push_back(std::to_string(v));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

SimpleGraph path_graph(int edges) {
  SimpleGraph g;
  g.num_vertices = edges + 1;
  for (int i = 0; i < edges; ++i) g.edges.emplace_back(i, i + 1);
  for (int v = 0; v <= edges; ++v) g.vertex_names.push_back(std::to_string(v + 1));
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g;
  g.num_vertices = n;
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    g.edges.emplace_back(std::min(i, j), std::max(i, j));
  }
  for (int v = 0; v < n; ++v) g.vertex_names.push_back(std::to_string(v + 1));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

SimpleGraph chair_tree() {
  SimpleGraph g;
  g.num_vertices = 5;
  g.edges = {{0, 1}, {1, 2}, {2, 3}, {1, 4}};
  for (int v = 0; v < 5; ++v) g.vertex_names.push_back(std::to_string(v + 1));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

SimpleGraph asymmetric_tree7() {
  // Center 0 with legs 1; 2-3; 4-5-6.
  SimpleGraph g;
  g.num_vertices = 7;
  g.edges = {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}};
  for (int v = 0; v < 7; ++v) g.vertex_names.push_back(std::to_string(v + 1));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

SimpleGraph prism() {
  SimpleGraph g;
  g.num_vertices = 6;
  g.edges = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  for (int v = 0; v < 6; ++v) g.vertex_names.push_back(std::to_string(v + 1));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

RankedPoset polygon(int p) {
  std::vector<std::vector<std::vector<int>>> covers(3);
  covers[0].assign(p, {});
  for (int i = 0; i < p; ++i) covers[1].push_back({std::min(i, (i + 1) % p), std::max(i, (i + 1) % p)});
  std::vector<int> all(p);
  std::iota(all.begin(), all.end(), 0);
  covers[2].push_back(all);
  return RankedPoset(2, covers);
}

RankedPoset digon() {
  std::vector<std::vector<std::vector<int>>> covers(3);
  covers[0] = {{}, {}};
  covers[1] = {{0, 1}, {0, 1}};
  covers[2] = {{0, 1}};
  return RankedPoset(2, covers);
}

RankedPoset tetrahedron() {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) edges.emplace_back(u, v);
  std::vector<std::vector<std::vector<int>>> covers(4);
  covers[0].assign(4, {});
  for (auto [u, v] : edges) covers[1].push_back({u, v});
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> tri;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].first != skip && edges[e].second != skip) tri.push_back(static_cast<int>(e));
    covers[2].push_back(tri);
  }
  covers[3].push_back({0, 1, 2, 3});
  return RankedPoset(3, covers);
}

RankedPoset square_pyramid() {
  // Vertex 0 is the apex; 1..4 the base cycle.
  std::vector<std::pair<int, int>> edges = {{1, 2}, {2, 3}, {3, 4}, {1, 4},
                                            {0, 1}, {0, 2}, {0, 3}, {0, 4}};
  std::vector<std::vector<std::vector<int>>> covers(4);
  covers[0].assign(5, {});
  for (auto [u, v] : edges) covers[1].push_back({u, v});
  covers[2].push_back({0, 1, 2, 3});  // base square
  auto edge_id = [&edges](int u, int v) {
    auto key = std::minmax(u, v);
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e] == std::pair{key.first, key.second}) return static_cast<int>(e);
    return -1;
  };
  for (int i = 1; i <= 4; ++i) {
    int j = i == 4 ? 1 : i + 1;
    covers[2].push_back({edge_id(0, i), edge_id(0, j), edge_id(i, j)});
  }
  covers[3].push_back({0, 1, 2, 3, 4});
  return RankedPoset(3, covers);
}

RankedPoset broken_diamond() {
  std::vector<std::vector<std::vector<int>>> covers(3);
  covers[0].assign(4, {});
  covers[1] = {{0, 1}, {1, 2}, {2, 3}};  // the edge {3,0} is missing
  covers[2].push_back({0, 1, 2});
  return RankedPoset(2, covers);
}

std::vector<Perm> graph_automorphisms_bruteforce(const SimpleGraph& g) {
  std::set<std::pair<int, int>> edge_set(g.edges.begin(), g.edges.end());
  Perm p = identity_perm(g.num_vertices);
  std::vector<Perm> out;
  do {
    bool ok = true;
    for (auto [u, v] : g.edges) {
      auto key = std::minmax(p[u], p[v]);
      if (!edge_set.count(key)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

EdgeColoredGraph random_colored_graph(std::mt19937& rng) {
  auto pick = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
  };
  int die = pick(0, 9);  // weighted toward the interesting ranks
  int r = die < 1 ? 1 : die < 3 ? 2 : die < 7 ? 3 : 4;
  if (r == 1) return segment();
  if (r == 2) return cycle(2 * pick(2, 24));

  for (int attempt = 0; attempt < 20000; ++attempt) {
    int n = 2 * pick(3, 24);  // up to 48 vertices
    // Colors 0/1 alternate along a random Hamiltonian cycle, which settles
    // connectivity; the remaining colors are random perfect matchings
    // avoiding the edges already present.
    std::vector<int> tour(n);
    std::iota(tour.begin(), tour.end(), 0);
    std::shuffle(tour.begin(), tour.end(), rng);
    std::vector<EdgeList> edges;
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      auto key = std::minmax(tour[i], tour[(i + 1) % n]);
      ok = seen.insert(key).second;  // n = 2 could close a doubled edge
      edges.push_back({key.first, key.second, i % 2});
    }
    for (int c = 2; c < r && ok; ++c) {
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      for (int i = 0; i < n; i += 2) {
        auto key = std::minmax(order[i], order[i + 1]);
        if (!seen.insert(key).second) {
          ok = false;
          break;
        }
        edges.push_back({key.first, key.second, c});
      }
    }
    if (!ok) continue;
    return build_graph(n, r, edges);
  }
  throw std::runtime_error("random graph generation failed");
}

}  // namespace fixtures
