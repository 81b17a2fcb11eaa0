#include "colorful/topology.hpp"

#include <algorithm>
#include <map>

#include "colorful/error.hpp"

namespace colorful {

namespace {

void require_map(const RankedPoset& p) {
  if (p.rank() != 3)
    throw DomainError(ErrorCode::NotRankThree, "rank " + std::to_string(p.rank()) + " polytope");
  for (int k = 0; k < p.num_faces(1); ++k)
    if (p.covered_by(1, k).size() != 2)
      throw DomainError(ErrorCode::NotAPolytope,
                        "edge " + std::to_string(k) + " lies in " +
                            std::to_string(p.covered_by(1, k).size()) + " 2-faces");
}

// Boundary of a 2-face as a cyclic sequence of (vertex, edge) pairs. Walks
// by edges so doubled vertex pairs (digonal faces) stay unambiguous.
std::vector<std::pair<int, int>> boundary_cycle(const RankedPoset& p, int face) {
  const std::vector<int>& face_edges = p.covers_of(2, face);
  // vertex -> the (at most two) boundary edges through it
  std::map<int, std::vector<int>> at_vertex;
  for (int e : face_edges)
    for (int v : p.covers_of(1, e)) at_vertex[v].push_back(e);
  for (const auto& [v, es] : at_vertex)
    if (es.size() != 2)
      throw DomainError(ErrorCode::NotAPolytope, "2-face boundary is not a polygon");

  std::vector<std::pair<int, int>> cycle;
  int start_edge = face_edges[0];
  int v = p.covers_of(1, start_edge)[0];
  int e = start_edge;
  do {
    cycle.emplace_back(v, e);
    // Step across e, then leave the far endpoint by the other edge.
    const std::vector<int>& ends = p.covers_of(1, e);
    int w = ends[0] == v ? (ends.size() > 1 ? ends[1] : ends[0]) : ends[0];
    const std::vector<int>& next_edges = at_vertex.at(w);
    e = next_edges[0] == e ? next_edges[1] : next_edges[0];
    v = w;
  } while (!(v == cycle[0].first && e == cycle[0].second));
  if (cycle.size() != face_edges.size())
    throw DomainError(ErrorCode::NotAPolytope, "2-face boundary is not a single cycle");
  return cycle;
}

}  // namespace

bool orientable_via_flag_graph(const RankedPoset& p) {
  // A map is orientable iff its flag graph is bipartite.
  std::vector<ChainFlag> all = flags(p);
  std::map<ChainFlag, int> id_of;
  for (std::size_t i = 0; i < all.size(); ++i) id_of[all[i]] = static_cast<int>(i);
  std::vector<int> side(all.size(), -1);
  std::vector<int> queue{0};
  side[0] = 0;
  while (!queue.empty()) {
    int f = queue.back();
    queue.pop_back();
    for (int i = 0; i <= p.rank() - 1; ++i) {
      int g = id_of.at(flag_adjacent(p, all[f], i));
      if (side[g] == -1) {
        side[g] = 1 - side[f];
        queue.push_back(g);
      } else if (side[g] == side[f]) {
        return false;
      }
    }
  }
  return true;
}

bool orientable_via_face_orientations(const RankedPoset& p) {
  require_map(p);
  int num_faces = p.num_faces(2);
  // Directed boundary per face; orientation flips reverse it.
  std::vector<std::vector<std::pair<int, int>>> cycles;
  cycles.reserve(num_faces);
  for (int f = 0; f < num_faces; ++f) cycles.push_back(boundary_cycle(p, f));

  // direction[f][e] = +1 if face f (in its chosen orientation) traverses
  // edge e from cycle order, encoded by the vertex it leaves from.
  auto traversal = [&](int f, int e, int flip) {
    const auto& cycle = cycles[f];
    for (std::size_t i = 0; i < cycle.size(); ++i)
      if (cycle[i].second == e) {
        int from = cycle[i].first;
        const std::vector<int>& ends = p.covers_of(1, e);
        int other = ends[0] == from && ends.size() > 1 ? ends[1] : ends[0];
        return flip ? std::pair{other, from} : std::pair{from, other};
      }
    throw DomainError(ErrorCode::NotAPolytope, "edge missing from boundary");
  };

  std::vector<int> flip(num_faces, -1);
  flip[0] = 0;
  std::vector<int> queue{0};
  while (!queue.empty()) {
    int f = queue.back();
    queue.pop_back();
    for (const auto& [v, e] : cycles[f]) {
      // The other face through e must traverse it in the opposite direction.
      const std::vector<int>& two = p.covered_by(1, e);
      int g = two[0] == f ? two[1] : two[0];
      auto mine = traversal(f, e, flip[f]);
      for (int candidate : {0, 1}) {
        auto theirs = traversal(g, e, candidate);
        bool opposite = mine.first == theirs.second && mine.second == theirs.first;
        if (!opposite) continue;
        if (flip[g] == -1) {
          flip[g] = candidate;
          queue.push_back(g);
        } else if (flip[g] != candidate) {
          return false;
        }
        break;
      }
      if (flip[g] == -1) return false;  // digonal boundaries can fail both ways
    }
  }
  return true;
}

SurfaceReport classify_surface(const RankedPoset& p) {
  require_map(p);
  SurfaceReport report;
  report.f_vector = p.f_vector();
  report.euler = static_cast<long long>(p.num_faces(0)) - p.num_faces(1) + p.num_faces(2);
  report.orientable = orientable_via_flag_graph(p);
  if (report.orientable != orientable_via_face_orientations(p))
    throw DomainError(ErrorCode::NotAPolytope, "orientability routes disagree");
  for (int f = 0; f < p.num_faces(2); ++f)
    report.face_sizes.push_back(static_cast<int>(p.covers_of(2, f).size()));
  std::sort(report.face_sizes.begin(), report.face_sizes.end());

  long long chi = report.euler;
  if (chi > 2) throw DomainError(ErrorCode::NotAPolytope, "Euler characteristic above 2");
  if (report.orientable) {
    if (chi % 2 != 0)
      throw DomainError(ErrorCode::NotAPolytope, "orientable surface with odd characteristic");
    if (chi == 2)
      report.surface_name = "sphere";
    else if (chi == 0)
      report.surface_name = "torus";
    else
      report.surface_name = "genus-" + std::to_string((2 - chi) / 2);
  } else {
    if (chi == 1)
      report.surface_name = "projective-plane";
    else if (chi == 0)
      report.surface_name = "klein-bottle";
    else
      report.surface_name = "non-orientable-genus-" + std::to_string(2 - chi);
  }
  return report;
}

std::string SchlafliType::to_string() const {
  if (uniform) return "{" + std::to_string(q) + "," + std::to_string(k) + "}";
  auto profile = [](const std::vector<int>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size();) {
      std::size_t j = i;
      while (j < values.size() && values[j] == values[i]) ++j;
      if (i) out += ",";
      out += std::to_string(values[i]);
      if (j - i > 1) out += "^" + std::to_string(j - i);
      i = j;
    }
    return out + "}";
  };
  return "irregular faces=" + profile(face_sizes) + " vertices=" + profile(vertex_degrees);
}

SchlafliType schlafli_type(const RankedPoset& p) {
  if (p.rank() != 3)
    throw DomainError(ErrorCode::NotRankThree, "rank " + std::to_string(p.rank()) + " polytope");
  SchlafliType type;
  for (int f = 0; f < p.num_faces(2); ++f)
    type.face_sizes.push_back(static_cast<int>(p.covers_of(2, f).size()));
  for (int v = 0; v < p.num_faces(0); ++v)
    type.vertex_degrees.push_back(static_cast<int>(p.covered_by(0, v).size()));
  std::sort(type.face_sizes.begin(), type.face_sizes.end());
  std::sort(type.vertex_degrees.begin(), type.vertex_degrees.end());
  type.uniform = !type.face_sizes.empty() && !type.vertex_degrees.empty() &&
                 type.face_sizes.front() == type.face_sizes.back() &&
                 type.vertex_degrees.front() == type.vertex_degrees.back();
  if (type.uniform) {
    type.q = type.face_sizes.front();
    type.k = type.vertex_degrees.front();
  }
  return type;
}

}  // namespace colorful
