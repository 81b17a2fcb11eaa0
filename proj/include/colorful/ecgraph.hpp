#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colorful/colorset.hpp"
#include "colorful/error.hpp"

namespace colorful {

// A connected simple r-regular graph with a proper r-edge-coloring: every
// vertex meets each color exactly once, so each color class is a perfect
// matching. Vertices and colors are dense ids; external names live in side
// tables. Immutable after construction.
struct EdgeColoredGraph {
  int num_vertices = 0;
  int num_colors = 0;  // r
  std::vector<int> adjacency;  // adjacency[v * r + c] = neighbor of v along color c
  std::vector<std::string> vertex_names;
  std::vector<std::string> color_names;

  int neighbor(int v, int c) const { return adjacency[v * num_colors + c]; }
  ColorSet all_colors() const { return ColorSet::full(num_colors); }

  struct Edge {
    int u, v, color;  // u < v
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::vector<Edge> edges() const;  // sorted by (u, v)
};

// Raw colored edge list prior to validation; u/v/color are dense ids.
struct EdgeList {
  int u, v, color;
};

// Validates an edge list and assembles the graph. Checks, in order: loops,
// duplicate edges, color count <= 64 (callers intern names first), repeated
// color at a vertex, degree == r at every vertex, connectivity.
EdgeColoredGraph build_graph(int num_vertices, int num_colors,
                             const std::vector<EdgeList>& edges,
                             std::vector<std::string> vertex_names = {},
                             std::vector<std::string> color_names = {});

// One edge per line: "<u> <v> <color>", arbitrary non-whitespace tokens;
// '#' starts a comment. Vertex and color ids follow first appearance.
EdgeColoredGraph parse_graph(std::string_view text);
std::string serialize_graph(const EdgeColoredGraph& g);

// DOT export: undirected, each edge carries color="<name>" label="<name>".
std::string to_dot(const EdgeColoredGraph& g);

// rep[v] = minimum vertex of the class of v under ~C (paths using colors
// from C only).
std::vector<int> component_reps(const EdgeColoredGraph& g, ColorSet C);
// The ~C classes, each sorted, listed in order of their representative.
std::vector<std::vector<int>> partition_classes(const EdgeColoredGraph& g, ColorSet C);

struct ColorDeletion {
  std::vector<EdgeColoredGraph> components;        // each on colors R \ {b}, re-indexed
  std::vector<std::vector<int>> original_vertices; // per component: new id -> old id
  std::vector<int> original_colors;                // new color id -> old color id
};
ColorDeletion delete_color(const EdgeColoredGraph& g, int color);

// Uncolored simple graph (input to 1-factorization and Cayley constructions).
struct SimpleGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
  std::vector<std::string> vertex_names;

  std::vector<std::vector<int>> adjacency() const;
};

// One edge per line: "<u> <v>"; '#' starts a comment.
SimpleGraph parse_simple_graph(std::string_view text);

// Proper r-edge-coloring of a connected r-regular graph by backtracking over
// edges in lexicographic order, first-fit colors (new colors introduced in
// increasing order, which quotients out color renamings). Throws Infeasible
// for type-2 graphs.
EdgeColoredGraph find_one_factorization(const SimpleGraph& g);

// Enumerates proper colorings in the same deterministic order until visit
// returns true; returns that coloring, or nullopt when the search finishes.
std::optional<EdgeColoredGraph> find_one_factorization_if(
    const SimpleGraph& g, const std::function<bool(const EdgeColoredGraph&)>& visit);

}  // namespace colorful
