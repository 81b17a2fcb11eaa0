#include <set>

#include "colorful/autgroup.hpp"
#include "colorful/cayley.hpp"
#include "colorful/colorful.hpp"
#include "colorful/topology.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace colorful;

TEST_CASE("Z_2^3 gives the 3-cube with the standard coloring") {
  CayleyGraph cg = cayley_graph(elementary_abelian_2(3));
  CHECK(cg.graph.num_vertices == 8);
  CHECK(cg.graph.num_colors == 3);
  ColorfulPoset cp = build_poset(cg.graph);
  CHECK(cp.poset.f_vector() == std::vector<int>{8, 12, 6, 1});
  CHECK(classify_surface(cp.poset).surface_name == "sphere");
}

TEST_CASE("S3 over the path transpositions is the alternating hexagon") {
  CayleyGraph cg = graphicahedron_graph(fixtures::path_graph(2));
  CHECK(cg.graph.num_vertices == 6);
  CHECK(cg.graph.num_colors == 2);
  // 2-regular connected and properly 2-colored: the 6-cycle.
  ColorfulPoset cp = build_poset(cg.graph);
  CHECK(cp.poset.f_vector() == std::vector<int>{6, 6, 1});
}

TEST_CASE("S3 over all transpositions is K_{3,3}") {
  EdgeColoredGraph g = fixtures::k33();
  CHECK(g.num_vertices == 6);
  CHECK(g.num_colors == 3);
  // Complete bipartite on the parity classes: any two vertices are adjacent
  // iff they have different parity; count neighbourhoods.
  for (int v = 0; v < 6; ++v) {
    std::set<int> nbrs;
    for (int c = 0; c < 3; ++c) nbrs.insert(g.neighbor(v, c));
    CHECK(nbrs.size() == 3);
    CHECK(!nbrs.count(v));
  }
}

TEST_CASE("generator validation") {
  GenGroup bad;
  bad.degree = 3;
  bad.generators = {identity_perm(3)};
  CHECK_THROWS_AS(cayley_graph(bad), DomainError);

  GenGroup non_involution;
  non_involution.degree = 3;
  non_involution.generators = {{1, 2, 0}};
  CHECK_THROWS_AS(cayley_graph(non_involution), DomainError);

  // Transpositions of a disconnected graph do not generate S_p.
  SimpleGraph two_edges;
  two_edges.num_vertices = 4;
  two_edges.edges = {{0, 1}, {2, 3}};
  two_edges.vertex_names = {"1", "2", "3", "4"};
  CHECK_THROWS_AS(graphicahedron_graph(two_edges), DomainError);
  try {
    graphicahedron_graph(two_edges);
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::DoesNotGenerate);
  }
}

TEST_CASE("aut(Gamma, T) of the classic generating sets") {
  CHECK(aut_gamma_T(graphicahedron_graph(fixtures::path_graph(2))).size() == 2);
  CHECK(aut_gamma_T(cayley_graph(elementary_abelian_2(3))).size() == 6);
  // Remark on symmetry-free graphs: the asymmetric 7-vertex tree admits only
  // the identity, so the polytope group is S_7 acting regularly on vertices.
  CHECK(aut_gamma_T(graphicahedron_graph(fixtures::asymmetric_tree7())).size() == 1);
}

TEST_CASE("aut(Gamma, T) matches the graph automorphisms for graphicahedra") {
  for (const SimpleGraph& g : {fixtures::path_graph(2), fixtures::cycle_graph(3),
                               fixtures::chair_tree(), fixtures::path_graph(3)}) {
    CayleyGraph cg = graphicahedron_graph(g);
    CHECK(aut_gamma_T(cg).size() == fixtures::graph_automorphisms_bruteforce(g).size());
  }
}

TEST_CASE("semidirect decomposition on the named instances") {
  SUBCASE("S3 with the path generators: the hexagon group") {
    SemidirectReport r = check_semidirect(sym_group_transpositions(fixtures::path_graph(2)));
    CHECK(r.group_order == 6);
    CHECK(r.aut_order == 2);
    CHECK(r.gamma_c_order == 12);
    CHECK(r.ok());
  }
  SUBCASE("Z_2^3: the cube group") {
    SemidirectReport r = check_semidirect(elementary_abelian_2(3));
    CHECK(r.group_order == 8);
    CHECK(r.aut_order == 6);
    CHECK(r.gamma_c_order == 48);
    CHECK(r.ok());
  }
  SUBCASE("S3 with all transpositions") {
    SemidirectReport r = check_semidirect(sym_group_transpositions(fixtures::cycle_graph(3)));
    CHECK(r.group_order == 6);
    CHECK(r.aut_order == 6);
    CHECK(r.gamma_c_order == 36);
    CHECK(r.ok());
  }
}

TEST_CASE("the K_{3,3} graph group is twice the color respecting group") {
  // The inversion map is a graph automorphism but not color respecting.
  SimpleGraph k33_uncolored;
  k33_uncolored.num_vertices = 6;
  EdgeColoredGraph colored = fixtures::k33();
  for (const auto& e : colored.edges()) k33_uncolored.edges.emplace_back(e.u, e.v);
  std::sort(k33_uncolored.edges.begin(), k33_uncolored.edges.end());
  for (int v = 0; v < 6; ++v) k33_uncolored.vertex_names.push_back(std::to_string(v));
  CHECK(fixtures::graph_automorphisms_bruteforce(k33_uncolored).size() == 72);
  CHECK(color_respecting_group(colored).size() == 36);
}

TEST_CASE("right multiplications are color preserving and sharply transitive") {
  CayleyGraph cg = graphicahedron_graph(fixtures::path_graph(2));
  const GenGroup& G = cg.group;
  int count = static_cast<int>(cg.elements.size());
  std::set<Perm> seen;
  for (int gi = 0; gi < count; ++gi) {
    Perm ginv = inverse(cg.elements[gi]);
    Perm vmap(count);
    for (int u = 0; u < count; ++u) vmap[u] = cg.element_id(G.mul(cg.elements[u], ginv));
    // Color preserving automorphism of the Cayley graph.
    for (int u = 0; u < count; ++u)
      for (int c = 0; c < cg.graph.num_colors; ++c)
        CHECK(cg.graph.neighbor(vmap[u], c) == vmap[cg.graph.neighbor(u, c)]);
    seen.insert(vmap);
  }
  CHECK(seen.size() == static_cast<std::size_t>(count));  // the action is regular
  std::set<int> images_of_identity;
  for (const Perm& vmap : seen) images_of_identity.insert(vmap[0]);
  CHECK(images_of_identity.size() == static_cast<std::size_t>(count));
}

TEST_CASE("conjugation identity d g-hat d^-1 = (dg)-hat") {
  CayleyGraph cg = cayley_graph(elementary_abelian_2(3));
  const GenGroup& G = cg.group;
  int count = static_cast<int>(cg.elements.size());
  auto hat = [&](int gi) {
    Perm ginv = inverse(cg.elements[gi]);
    Perm vmap(count);
    for (int u = 0; u < count; ++u) vmap[u] = cg.element_id(G.mul(cg.elements[u], ginv));
    return vmap;
  };
  for (const GenSetAut& d : aut_gamma_T(cg))
    for (int gi = 0; gi < count; ++gi) {
      Perm lhs = compose(d.vertex_map, compose(hat(gi), inverse(d.vertex_map)));
      CHECK(lhs == hat(d.vertex_map[gi]));
    }
}

TEST_CASE("graphicahedron group orders are p! times the graph group") {
  struct Case {
    SimpleGraph g;
    std::uint64_t expected;
  };
  for (const Case& c : {Case{fixtures::path_graph(2), 12}, Case{fixtures::cycle_graph(3), 36},
                        Case{fixtures::chair_tree(), 240}}) {
    CayleyGraph cg = graphicahedron_graph(c.g);
    CHECK(color_respecting_group(cg.graph).size() == c.expected);
  }
}

TEST_CASE("path graphicahedron 2-faces: hexagons for braids, squares otherwise") {
  CayleyGraph cg = graphicahedron_graph(fixtures::path_graph(3));
  for (const TwoFace& tf : two_faces(cg.graph)) {
    bool adjacent = std::abs(tf.c1 - tf.c2) == 1;  // colors are path edges in order
    CHECK(tf.size == (adjacent ? 6 : 4));
  }
}
