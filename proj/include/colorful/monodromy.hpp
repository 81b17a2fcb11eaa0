#pragma once

#include <cstdint>
#include <vector>

#include "colorful/cayley.hpp"
#include "colorful/colorful.hpp"
#include "colorful/permgroup.hpp"
#include "colorful/poset.hpp"

namespace colorful {

// The monodromy group of a polytope: permutations of the flag set generated
// by the adjacency involutions s_i (realizing the right action Psi.s_i =
// Psi^i). The base flag is the lexicographically least one (index 0).
struct MonodromyGroup {
  int flag_count = 0;
  std::vector<ChainFlag> flags;   // canonical order
  std::vector<Perm> generators;   // s_0 ... s_{n-1}
  PermGroup group;
  int base_flag = 0;
};
MonodromyGroup monodromy_group(const RankedPoset& p, std::uint64_t max_flags = 1000000);

// Cayley graph M of Mon(P) over the s_i (edge {u, s_i u} colored i).
CayleyGraph monodromy_cayley(const RankedPoset& p, std::uint64_t max_vertices = 100000);
ColorfulPoset monodromy_polytope(const RankedPoset& p, std::uint64_t max_vertices = 100000,
                                 std::uint64_t max_faces = 1000000);

// The quotient M_H by the stabilizer H of the base flag, with the explicit
// color preserving isomorphism phi: uH -> Phi . u^{-1} onto the flag graph.
struct QuotientResult {
  EdgeColoredGraph quotient;            // vertices are cosets
  std::vector<int> coset_of_vertex;     // M vertex -> quotient vertex
  std::vector<int> phi;                 // quotient vertex -> flag graph vertex
  std::uint64_t stabilizer_order = 0;
  bool iso_verified = false;            // phi checked edge-by-edge with colors
};
QuotientResult quotient_by_stabilizer(const RankedPoset& p, std::uint64_t max_vertices = 100000);

// The covering gamma: P_M -> P_G, (C, u) -> (C, uH), with its verification.
struct CoveringReport {
  std::uint64_t monodromy_order = 0;
  std::uint64_t flag_count = 0;
  bool surjective = false;
  bool rank_preserving = false;
  bool incidence_preserving = false;
  bool flag_adjacency_preserving = false;
  bool injective = false;              // iff P is regular
  bool isomorphism() const { return injective; }
  bool all_checks() const {
    return surjective && rank_preserving && incidence_preserving && flag_adjacency_preserving;
  }
};
CoveringReport covering_map(const RankedPoset& p, std::uint64_t max_vertices = 100000,
                            std::uint64_t max_faces = 1000000);

// Whether s_i -> s_{n-1-i} extends to a group automorphism of Mon(P);
// requires the layer hypothesis (no digonal section), else HypothesisViolated.
struct ReversalReport {
  bool exists = false;
  std::uint64_t monodromy_order = 0;
  std::uint64_t gamma_c_M_order = 0;   // |Gamma_c(M)|, equals |Mon| * (1 or 2)
};
ReversalReport generator_reversal_automorphism(const RankedPoset& p,
                                               std::uint64_t max_vertices = 100000);

}  // namespace colorful
