#include "colorful/ecgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace colorful {

namespace {

std::vector<std::string> default_names(const std::string& prefix, int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

// Splits into non-empty lines with '#' comments stripped.
std::vector<std::pair<int, std::vector<std::string>>> tokenize_lines(std::string_view text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (!tokens.empty()) out.emplace_back(lineno, std::move(tokens));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return out;
}

}  // namespace

std::vector<EdgeColoredGraph::Edge> EdgeColoredGraph::edges() const {
  std::vector<Edge> out;
  for (int v = 0; v < num_vertices; ++v)
    for (int c = 0; c < num_colors; ++c) {
      int w = neighbor(v, c);
      if (v < w) out.push_back({v, w, c});
    }
  std::sort(out.begin(), out.end(),
            [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
  return out;
}

EdgeColoredGraph build_graph(int num_vertices, int num_colors,
                             const std::vector<EdgeList>& edges,
                             std::vector<std::string> vertex_names,
                             std::vector<std::string> color_names) {
  if (num_colors > 64)
    throw DomainError(ErrorCode::TooManyColors,
                      std::to_string(num_colors) + " colors (at most 64 supported)");
  if (vertex_names.empty()) vertex_names = default_names("v", num_vertices);
  if (color_names.empty()) color_names = default_names("c", num_colors);

  std::set<std::pair<int, int>> seen;
  for (const EdgeList& e : edges) {
    if (e.u == e.v)
      throw DomainError(ErrorCode::LoopEdge, "loop at vertex " + vertex_names[e.u]);
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw DomainError(ErrorCode::DuplicateEdge,
                        "edge " + vertex_names[key.first] + " " + vertex_names[key.second] +
                            " appears more than once");
  }

  EdgeColoredGraph g;
  g.num_vertices = num_vertices;
  g.num_colors = num_colors;
  g.vertex_names = std::move(vertex_names);
  g.color_names = std::move(color_names);
  g.adjacency.assign(static_cast<std::size_t>(num_vertices) * num_colors, -1);

  for (const EdgeList& e : edges) {
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      int& slot = g.adjacency[static_cast<std::size_t>(a) * num_colors + e.color];
      if (slot != -1) {
        // Report the vertex's full color multiset for the error message.
        std::vector<std::string> at;
        for (const EdgeList& f : edges)
          if (f.u == a || f.v == a) at.push_back(g.color_names[f.color]);
        std::sort(at.begin(), at.end());
        std::string list;
        for (std::size_t i = 0; i < at.size(); ++i) list += (i ? "," : "") + at[i];
        throw DomainError(ErrorCode::NotProperlyColored,
                          "vertex " + g.vertex_names[a] + " has colors {" + list + "}");
      }
      slot = b;
    }
  }

  for (int v = 0; v < num_vertices; ++v) {
    int degree = 0;
    for (int c = 0; c < num_colors; ++c)
      if (g.neighbor(v, c) != -1) ++degree;
    if (degree != num_colors)
      throw DomainError(ErrorCode::NotRegular,
                        "vertex " + g.vertex_names[v] + " has degree " + std::to_string(degree) +
                            " but there are " + std::to_string(num_colors) + " colors");
  }

  if (num_vertices > 0) {
    std::vector<int> seen_v(num_vertices, 0);
    std::vector<int> stack{0};
    seen_v[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int c = 0; c < num_colors; ++c) {
        int w = g.neighbor(v, c);
        if (w >= 0 && !seen_v[w]) {
          seen_v[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    if (count != num_vertices)
      throw DomainError(ErrorCode::NotConnected,
                        std::to_string(count) + " of " + std::to_string(num_vertices) +
                            " vertices reachable from " + g.vertex_names[0]);
  }
  return g;
}

EdgeColoredGraph parse_graph(std::string_view text) {
  std::map<std::string, int> vertex_id, color_id;
  std::vector<std::string> vertex_names, color_names;
  std::vector<EdgeList> edges;

  auto intern = [](std::map<std::string, int>& ids, std::vector<std::string>& names,
                   const std::string& tok) {
    auto [it, fresh] = ids.emplace(tok, static_cast<int>(names.size()));
    if (fresh) names.push_back(tok);
    return it->second;
  };

  for (const auto& [lineno, tokens] : tokenize_lines(text)) {
    if (tokens.size() != 3)
      throw DomainError(ErrorCode::MalformedLine,
                        "line " + std::to_string(lineno) + ": expected '<u> <v> <color>'");
    int u = intern(vertex_id, vertex_names, tokens[0]);
    int v = intern(vertex_id, vertex_names, tokens[1]);
    int c = intern(color_id, color_names, tokens[2]);
    if (static_cast<int>(color_names.size()) > 64)
      throw DomainError(ErrorCode::TooManyColors, "more than 64 colors in input");
    edges.push_back({u, v, c});
  }
  if (edges.empty()) throw DomainError(ErrorCode::MalformedLine, "no edges in input");
  int num_vertices = static_cast<int>(vertex_names.size());
  int num_colors = static_cast<int>(color_names.size());
  return build_graph(num_vertices, num_colors, edges, std::move(vertex_names),
                     std::move(color_names));
}

std::string serialize_graph(const EdgeColoredGraph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += g.vertex_names[e.u];
    out += ' ';
    out += g.vertex_names[e.v];
    out += ' ';
    out += g.color_names[e.color];
    out += '\n';
  }
  return out;
}

std::string to_dot(const EdgeColoredGraph& g) {
  std::string out = "graph G {\n";
  for (const auto& e : g.edges()) {
    out += "  \"" + g.vertex_names[e.u] + "\" -- \"" + g.vertex_names[e.v] + "\" [color=\"" +
           g.color_names[e.color] + "\", label=\"" + g.color_names[e.color] + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::vector<int> component_reps(const EdgeColoredGraph& g, ColorSet C) {
  // Union-find keeping the minimum vertex as root.
  std::vector<int> parent(g.num_vertices);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int v = 0; v < g.num_vertices; ++v)
    for (int c : C.to_vector()) {
      int a = find(v), b = find(g.neighbor(v, c));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> rep(g.num_vertices);
  for (int v = 0; v < g.num_vertices; ++v) rep[v] = find(v);
  return rep;
}

std::vector<std::vector<int>> partition_classes(const EdgeColoredGraph& g, ColorSet C) {
  std::vector<int> rep = component_reps(g, C);
  std::map<int, std::vector<int>> by_rep;
  for (int v = 0; v < g.num_vertices; ++v) by_rep[rep[v]].push_back(v);
  std::vector<std::vector<int>> out;
  out.reserve(by_rep.size());
  for (auto& [r, members] : by_rep) out.push_back(std::move(members));
  return out;
}

ColorDeletion delete_color(const EdgeColoredGraph& g, int color) {
  ColorDeletion result;
  for (int c = 0; c < g.num_colors; ++c)
    if (c != color) result.original_colors.push_back(c);

  std::vector<std::string> sub_color_names;
  for (int c : result.original_colors) sub_color_names.push_back(g.color_names[c]);

  ColorSet keep = g.all_colors().without(color);
  for (const auto& members : partition_classes(g, keep)) {
    std::vector<int> new_id(g.num_vertices, -1);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < members.size(); ++i) {
      new_id[members[i]] = static_cast<int>(i);
      names.push_back(g.vertex_names[members[i]]);
    }
    std::vector<EdgeList> edges;
    for (std::size_t nc = 0; nc < result.original_colors.size(); ++nc)
      for (int v : members) {
        int w = g.neighbor(v, result.original_colors[nc]);
        if (v < w) edges.push_back({new_id[v], new_id[w], static_cast<int>(nc)});
      }
    result.components.push_back(build_graph(static_cast<int>(members.size()),
                                            static_cast<int>(result.original_colors.size()), edges,
                                            std::move(names), sub_color_names));
    result.original_vertices.push_back(members);
  }
  return result;
}

std::vector<std::vector<int>> SimpleGraph::adjacency() const {
  std::vector<std::vector<int>> adj(num_vertices);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

SimpleGraph parse_simple_graph(std::string_view text) {
  std::map<std::string, int> vertex_id;
  SimpleGraph g;
  std::set<std::pair<int, int>> seen;
  for (const auto& [lineno, tokens] : tokenize_lines(text)) {
    if (tokens.size() != 2)
      throw DomainError(ErrorCode::MalformedLine,
                        "line " + std::to_string(lineno) + ": expected '<u> <v>'");
    auto intern = [&](const std::string& tok) {
      auto [it, fresh] = vertex_id.emplace(tok, static_cast<int>(g.vertex_names.size()));
      if (fresh) g.vertex_names.push_back(tok);
      return it->second;
    };
    int u = intern(tokens[0]);
    int v = intern(tokens[1]);
    if (u == v) throw DomainError(ErrorCode::LoopEdge, "loop at vertex " + tokens[0]);
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw DomainError(ErrorCode::DuplicateEdge,
                        "edge " + tokens[0] + " " + tokens[1] + " appears more than once");
    g.edges.emplace_back(key.first, key.second);
  }
  if (g.edges.empty()) throw DomainError(ErrorCode::MalformedLine, "no edges in input");
  g.num_vertices = static_cast<int>(g.vertex_names.size());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

// Shared backtracking core for 1-factorization search.
struct FactorizationSearch {
  const SimpleGraph& g;
  int r;
  std::vector<std::pair<int, int>> edges;  // lex order
  std::vector<int> color_of;
  std::vector<std::uint64_t> used_at;  // bitmask of colors present at each vertex
  const std::function<bool(const EdgeColoredGraph&)>& visit;
  std::optional<EdgeColoredGraph> found;

  FactorizationSearch(const SimpleGraph& graph, int degree,
                      const std::function<bool(const EdgeColoredGraph&)>& v)
      : g(graph), r(degree), edges(graph.edges), color_of(graph.edges.size(), -1),
        used_at(graph.num_vertices, 0), visit(v) {}

  EdgeColoredGraph materialize() const {
    std::vector<EdgeList> colored;
    colored.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
      colored.push_back({edges[i].first, edges[i].second, color_of[i]});
    std::vector<std::string> color_names;
    for (int c = 0; c < r; ++c)
      color_names.push_back(r <= 26 ? std::string(1, static_cast<char>('a' + c))
                                    : "c" + std::to_string(c));
    return build_graph(g.num_vertices, r, colored, g.vertex_names, color_names);
  }

  bool run(std::size_t i, int colors_used) {
    if (i == edges.size()) {
      EdgeColoredGraph candidate = materialize();
      if (visit(candidate)) {
        found = std::move(candidate);
        return true;
      }
      return false;
    }
    auto [u, v] = edges[i];
    int limit = std::min(r, colors_used + 1);  // new colors appear in order
    for (int c = 0; c < limit; ++c) {
      std::uint64_t bit = std::uint64_t{1} << c;
      if ((used_at[u] | used_at[v]) & bit) continue;
      used_at[u] |= bit;
      used_at[v] |= bit;
      color_of[i] = c;
      if (run(i + 1, std::max(colors_used, c + 1))) return true;
      color_of[i] = -1;
      used_at[u] &= ~bit;
      used_at[v] &= ~bit;
    }
    return false;
  }
};

int checked_degree(const SimpleGraph& g) {
  std::vector<int> degree(g.num_vertices, 0);
  for (auto [u, v] : g.edges) {
    ++degree[u];
    ++degree[v];
  }
  int r = degree.empty() ? 0 : degree[0];
  for (int v = 0; v < g.num_vertices; ++v)
    if (degree[v] != r)
      throw DomainError(ErrorCode::NotRegular, "vertex " + g.vertex_names[v] + " has degree " +
                                                   std::to_string(degree[v]) + ", expected " +
                                                   std::to_string(r));
  if (r > 64) throw DomainError(ErrorCode::TooManyColors, "degree above 64");
  // Connectivity.
  auto adj = g.adjacency();
  std::vector<int> seen(g.num_vertices, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  if (count != g.num_vertices)
    throw DomainError(ErrorCode::NotConnected, "input graph is not connected");
  return r;
}

}  // namespace

std::optional<EdgeColoredGraph> find_one_factorization_if(
    const SimpleGraph& g, const std::function<bool(const EdgeColoredGraph&)>& visit) {
  int r = checked_degree(g);
  FactorizationSearch search(g, r, visit);
  search.run(0, 0);
  return search.found;
}

EdgeColoredGraph find_one_factorization(const SimpleGraph& g) {
  auto result = find_one_factorization_if(g, [](const EdgeColoredGraph&) { return true; });
  if (!result)
    throw DomainError(ErrorCode::Infeasible, "graph is not 1-factorable (type 2)");
  return *result;
}

}  // namespace colorful
