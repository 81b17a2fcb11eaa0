#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "colorful/ecgraph.hpp"
#include "colorful/perm.hpp"

namespace colorful {

// A group handed over as a faithful permutation representation together with
// an ordered set of distinct involutory generators.
struct GenGroup {
  int degree = 0;
  std::vector<Perm> generators;  // T
  std::vector<std::string> generator_names;
  // When set, BFS closure must produce exactly this many elements
  // (DoesNotGenerate otherwise).
  std::optional<std::uint64_t> expected_order;
  // Realizations of a right action compose the other way around; the flag
  // action of a monodromy group is the one client that needs this.
  bool right_action = false;
  // Optional pretty-printer for vertex names; falls back to BFS ids.
  std::function<std::string(const Perm&, int)> element_name;

  // Group product a*b under the chosen realization.
  Perm mul(const Perm& a, const Perm& b) const;
};

// S_p acting on p points, one transposition per edge of G; colors named
// after the edges.
GenGroup sym_group_transpositions(const SimpleGraph& G);
// Z_2^n on 2n points, generator i swapping points 2i and 2i+1.
GenGroup elementary_abelian_2(int n);

struct CayleyGraph {
  GenGroup group;
  EdgeColoredGraph graph;       // vertex i is element i, edge {u, t_i u} color i
  std::vector<Perm> elements;   // BFS order from the identity
  std::vector<int> sorted_ids;  // element ids ordered by permutation value

  int element_id(const Perm& p) const;
};

// BFS enumeration from the identity, generators applied in index order.
CayleyGraph cayley_graph(const GenGroup& G, std::uint64_t max_vertices = 100000);

// A group automorphism permuting the generating set, as its action on the
// Cayley graph vertices plus the induced subscript permutation.
struct GenSetAut {
  Perm vertex_map;
  Perm subscript_perm;
};
// Tries every subscript permutation and keeps the ones extending to a group
// automorphism (checked against the faithful representation).
std::vector<GenSetAut> aut_gamma_T(const CayleyGraph& cg);

struct SemidirectReport {
  std::uint64_t group_order = 0;
  std::uint64_t aut_order = 0;
  std::uint64_t gamma_c_order = 0;
  bool order_product = false;         // |Gamma_c| == |Gamma| * |Aut(Gamma, T)|
  bool normal = false;                // right-multiplication subgroup normal in Gamma_c
  bool trivial_intersection = false;  // with Aut(Gamma, T)
  bool ok() const { return order_product && normal && trivial_intersection; }
};
SemidirectReport check_semidirect(const GenGroup& G, std::uint64_t max_vertices = 100000,
                                  std::uint64_t max_color_perms = 3628800);

// The Cayley graph of S_p over the transpositions given by the edges of G;
// its colorful polytope is the G-graphicahedron.
CayleyGraph graphicahedron_graph(const SimpleGraph& G, std::uint64_t max_vertices = 100000);

}  // namespace colorful
