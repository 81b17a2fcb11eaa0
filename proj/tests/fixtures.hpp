#pragma once

#include <random>
#include <string>

#include "colorful/cayley.hpp"
#include "colorful/ecgraph.hpp"
#include "colorful/poset.hpp"

namespace fixtures {

// Colored graphs (text in the colored-edge-list format).
extern const char* k4_text;         // unique 1-factorization of K4
extern const char* segment_text;    // single edge, r = 1
extern const char* fig3_text;       // 8-vertex graph whose polyhedron is a Klein bottle

colorful::EdgeColoredGraph k4();
colorful::EdgeColoredGraph segment();
colorful::EdgeColoredGraph fig3();
colorful::EdgeColoredGraph cube_standard();  // colors by axis: the cube itself
colorful::EdgeColoredGraph cube_torus();     // alternating 8-cycle plus a matching
colorful::EdgeColoredGraph cycle(int n);     // alternating 2-coloring, n even
colorful::EdgeColoredGraph k33();            // Cayley graph of S3 over all transpositions

colorful::SimpleGraph petersen();
colorful::SimpleGraph heawood();
colorful::SimpleGraph path_graph(int edges);
colorful::SimpleGraph cycle_graph(int n);
colorful::SimpleGraph chair_tree();          // the 5-vertex tree 1-2-3-4 with leaf 5 at 2
colorful::SimpleGraph asymmetric_tree7();    // spider with legs 1, 2, 3
colorful::SimpleGraph prism();               // K3 x K2

// Classic polytopes as ranked posets.
colorful::RankedPoset polygon(int p);
colorful::RankedPoset digon();
colorful::RankedPoset tetrahedron();
colorful::RankedPoset square_pyramid();
colorful::RankedPoset broken_diamond();      // 4-cycle with one edge removed

// Brute-force oracle: all automorphisms of an uncolored graph (|V| <= 12).
std::vector<colorful::Perm> graph_automorphisms_bruteforce(const colorful::SimpleGraph& g);

// Random properly colored regular graph, r <= 4, |V| <= 48; deterministic in
// the engine state.
colorful::EdgeColoredGraph random_colored_graph(std::mt19937& rng);

}  // namespace fixtures
