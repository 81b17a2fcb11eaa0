#include <algorithm>
#include <set>

#include "colorful/flagpoly.hpp"
#include "colorful/topology.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace colorful;

namespace {

RankedPoset cube_poset() { return build_poset(fixtures::cube_standard()).poset; }

}  // namespace

TEST_CASE("flag graph of the triangle is the alternating 6-cycle") {
  FlagGraphResult fg = flag_graph(fixtures::polygon(3));
  CHECK(fg.graph.num_vertices == 6);
  CHECK(fg.graph.num_colors == 2);
  ColorfulPoset cp = build_poset(fg.graph);
  CHECK(cp.poset.f_vector() == std::vector<int>{6, 6, 1});
}

TEST_CASE("flag graph of the segment is a single edge") {
  RankedPoset seg(1, {{{}, {}}, {{0, 1}}});
  FlagGraphResult fg = flag_graph(seg);
  CHECK(fg.graph.num_vertices == 2);
  CHECK(fg.graph.num_colors == 1);
}

TEST_CASE("flag graph of the cube has 48 vertices and validates") {
  FlagGraphResult fg = flag_graph(cube_poset());
  CHECK(fg.graph.num_vertices == 48);
  CHECK(fg.graph.num_colors == 3);
  // build_graph validated regularity, proper coloring and connectivity.
}

TEST_CASE("flag adjacency polytopes of small polyhedra") {
  ColorfulPoset tetra = flag_adjacency_polytope(fixtures::tetrahedron());
  CHECK(tetra.poset.f_vector() == std::vector<int>{24, 36, 14, 1});
  CHECK(classify_surface(tetra.poset).surface_name == "sphere");
  CHECK(validate_polytope(tetra.poset).valid());

  ColorfulPoset pyramid = flag_adjacency_polytope(fixtures::square_pyramid());
  CHECK(pyramid.poset.f_vector() == std::vector<int>{32, 48, 18, 1});
  CHECK(classify_surface(pyramid.poset).surface_name == "sphere");
}

TEST_CASE("the dual of the cube is the octahedron and admits no dualities") {
  RankedPoset cube = cube_poset();
  CHECK(dual(cube).f_vector() == std::vector<int>{6, 12, 8, 1});
  CHECK(dualities(cube).empty());
  CHECK(poset_automorphism_maps(build_poset(fixtures::k4()).poset).size() == 24);
}

TEST_CASE("cube vertex-edge layer graph counts") {
  LayerGraph layer = face_layer_graph(cube_poset(), 0);
  CHECK(layer.lower_count == 8);
  CHECK(layer.upper_count == 12);
  CHECK(layer.incidences.size() == 24);
  CHECK_FALSE(is_complete_bipartite(layer));
}

TEST_CASE("layer hypothesis") {
  CHECK(layer_hypothesis(cube_poset()));
  CHECK(layer_hypothesis(fixtures::polygon(3)));
  CHECK(layer_hypothesis(fixtures::square_pyramid()));
  CHECK_FALSE(layer_hypothesis(fixtures::digon()));
  CHECK(layer_hypothesis(RankedPoset(1, {{{}, {}}, {{0, 1}}})));  // vacuous at rank 1
}

TEST_CASE("extended group of the cube: no dualities, equality with Gamma_c") {
  ExtendedGroupReport r = extended_group(cube_poset());
  CHECK(r.hypothesis);
  CHECK(r.automorphism_order == 48);
  CHECK(r.duality_count == 0);
  CHECK(r.extended_order == 48);
  CHECK(r.gamma_c_order == 48);
  CHECK(r.equal);
}

TEST_CASE("extended group of the self-dual triangle doubles") {
  ExtendedGroupReport r = extended_group(fixtures::polygon(3));
  CHECK(r.automorphism_order == 6);
  CHECK(r.duality_count == 6);
  CHECK(r.extended_order == 12);
  CHECK(r.gamma_c_order == 12);
  CHECK(r.equal);
}

TEST_CASE("extended group of the self-dual tetrahedron doubles") {
  ExtendedGroupReport r = extended_group(fixtures::tetrahedron());
  CHECK(r.automorphism_order == 24);
  CHECK(r.duality_count == 24);
  CHECK(r.extended_order == 48);
  CHECK(r.gamma_c_order == 48);
  CHECK(r.equal);
}

TEST_CASE("segment: no layer graphs, Gamma_c of the flag graph has order 2") {
  RankedPoset seg(1, {{{}, {}}, {{0, 1}}});
  ExtendedGroupReport r = extended_group(seg);
  CHECK(r.hypothesis);
  CHECK(r.gamma_c_order == 2);
}

TEST_CASE("color preserving group of the flag graph is the polytope group") {
  for (const RankedPoset& p :
       {fixtures::polygon(3), fixtures::square_pyramid(), cube_poset()}) {
    FlagGraphResult fg = flag_graph(p);
    auto gamma_p = color_preserving_group(fg.graph);
    std::vector<Perm> auts = poset_automorphism_maps(p);
    REQUIRE(gamma_p.size() == auts.size());
    // Same action: each polytope automorphism induces one of the vertex maps.
    std::set<Perm> gamma_p_maps;
    for (const auto& aut : gamma_p) gamma_p_maps.insert(aut.vertex_map);
    for (const Perm& a : auts)
      CHECK(gamma_p_maps.count(automorphism_on_flags(p, fg.flag_of_vertex, a)));
  }
}

TEST_CASE("far-apart color pairs give square 2-faces in flag polytopes") {
  for (const RankedPoset& p : {cube_poset(), fixtures::square_pyramid()}) {
    FlagGraphResult fg = flag_graph(p);
    for (const TwoFace& tf : two_faces(fg.graph))
      if (std::abs(tf.c1 - tf.c2) > 1) CHECK(tf.size == 4);
  }
}

TEST_CASE("flag graph of the dual reverses colors") {
  RankedPoset p = fixtures::square_pyramid();
  FlagGraphResult fg = flag_graph(p);
  FlagGraphResult fg_dual = flag_graph(dual(p));
  REQUIRE(fg.graph.num_vertices == fg_dual.graph.num_vertices);
  int n = p.rank();
  // The color-i edge sets of the dual flag graph, reading color i as n-1-i,
  // must form an isomorphic colored graph; the identity-color check runs on
  // the recolored copy.
  EdgeColoredGraph recolored = fg_dual.graph;
  for (int v = 0; v < recolored.num_vertices; ++v)
    for (int c = 0; c < n; ++c)
      recolored.adjacency[v * n + c] = fg_dual.graph.neighbor(v, n - 1 - c);
  auto isos = color_respecting_maps(fg.graph, recolored, true);
  CHECK(!isos.empty());
}
