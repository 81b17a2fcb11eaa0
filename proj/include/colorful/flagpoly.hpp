#pragma once

#include <cstdint>
#include <vector>

#include "colorful/autgroup.hpp"
#include "colorful/colorful.hpp"
#include "colorful/poset.hpp"

namespace colorful {

// The flag graph of a polytope: vertices are its flags (in canonical order),
// an edge of color i joins i-adjacent flags. Properly colored and n-regular
// for any valid n-polytope.
struct FlagGraphResult {
  EdgeColoredGraph graph;
  std::vector<ChainFlag> flag_of_vertex;
};
FlagGraphResult flag_graph(const RankedPoset& p, std::uint64_t max_flags = 1000000);

// The colorful polytope of the flag graph.
ColorfulPoset flag_adjacency_polytope(const RankedPoset& p, std::uint64_t max_flags = 1000000,
                                      std::uint64_t max_faces = 1000000);

// True iff no (i, i+1)-face layer graph is complete bipartite (vacuous for
// rank < 2).
bool layer_hypothesis(const RankedPoset& p);

struct ExtendedGroupReport {
  std::uint64_t automorphism_order = 0;
  std::uint64_t duality_count = 0;
  std::uint64_t extended_order = 0;      // |Gamma-bar(P)|
  std::uint64_t gamma_c_order = 0;       // |Gamma_c(flag graph)|
  bool hypothesis = false;               // layer hypothesis
  bool equal = false;                    // extended group == Gamma_c as flag actions
  std::vector<Perm> extended_elements;   // action on flags, sorted
};
// Gamma-bar(P) = automorphisms and dualities acting on flags, compared
// against the color respecting group of the flag graph.
ExtendedGroupReport extended_group(const RankedPoset& p);

// Flag action of a polytope automorphism (flat face map).
Perm automorphism_on_flags(const RankedPoset& p, const std::vector<ChainFlag>& all_flags,
                           const Perm& face_map);
// Flag action of a duality (flat map on ranks 0..n-1): the image chain is the
// reversed image of the original.
Perm duality_on_flags(const RankedPoset& p, const std::vector<ChainFlag>& all_flags,
                      const Perm& duality_map);

}  // namespace colorful
