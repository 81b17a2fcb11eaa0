#pragma once

#include <cstdint>
#include <vector>

#include "colorful/ecgraph.hpp"
#include "colorful/perm.hpp"
#include "colorful/poset.hpp"

namespace colorful {

// A face of the colorful polytope: a color subset C together with the
// canonical (minimum) vertex of one class of ~C. rank = |C|.
struct Face {
  ColorSet colors;
  int rep;
  friend bool operator==(const Face&, const Face&) = default;
  friend bool operator<(const Face& a, const Face& b) {
    return a.colors != b.colors ? a.colors < b.colors : a.rep < b.rep;
  }
};

// Canonical face containing vertex v at color set C.
Face face(const EdgeColoredGraph& g, ColorSet C, int v);
// F <= G iff colors(F) is contained in colors(G) and their representatives
// are joined by a path using colors of G.
bool face_leq(const EdgeColoredGraph& g, const Face& f, const Face& upper);

// The fully materialized colorful polytope plus the face <-> (C, rep)
// correspondence. Faces of rank j are ordered by (C, rep).
struct ColorfulPoset {
  EdgeColoredGraph graph;
  RankedPoset poset;
  std::vector<std::vector<Face>> face_keys;  // per rank, parallel to poset faces

  int face_index(const Face& f) const;  // index within rank |colors|
  int flat_index(const Face& f) const;
};

ColorfulPoset build_poset(const EdgeColoredGraph& g, std::uint64_t max_faces = 1000000);

// A flag of the colorful polytope: a vertex together with an ordering of the
// colors; the rank-j face uses the first j colors.
struct ColorFlag {
  int vertex;
  Perm order;
  friend bool operator==(const ColorFlag&, const ColorFlag&) = default;
  friend bool operator<(const ColorFlag& a, const ColorFlag& b) {
    return a.vertex != b.vertex ? a.vertex < b.vertex : a.order < b.order;
  }
};

std::uint64_t color_flag_count(const EdgeColoredGraph& g);
std::vector<ColorFlag> color_flags(const EdgeColoredGraph& g, std::uint64_t max_flags = 1000000);
// The j-adjacent flag: j = 0 walks to the neighbor along the first color of
// the ordering; j >= 1 swaps the colors at positions j-1 and j, which changes
// exactly the rank-j face.
ColorFlag color_flag_adjacent(const EdgeColoredGraph& g, const ColorFlag& f, int j);
// The chain of poset faces determined by a color flag.
ChainFlag chain_of(const ColorfulPoset& cp, const ColorFlag& f);

struct GraphFacet {
  int color;                  // deleted color b
  EdgeColoredGraph component; // properly colored (r-1)-regular graph
  std::vector<int> vertices;  // original vertex ids
};
std::vector<GraphFacet> facets(const EdgeColoredGraph& g);

// True iff the faces above vertex v form the Boolean lattice on the colors.
bool vertex_figure_check(const EdgeColoredGraph& g, int v);

struct TwoFace {
  int c1, c2;  // c1 < c2
  int rep;
  int size;    // length of the bicolored cycle (always even)
};
std::vector<TwoFace> two_faces(const EdgeColoredGraph& g);

}  // namespace colorful
