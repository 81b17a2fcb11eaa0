#pragma once

#include <cstdint>
#include <vector>

#include "colorful/colorful.hpp"
#include "colorful/ecgraph.hpp"
#include "colorful/permgroup.hpp"

namespace colorful {

// A color respecting automorphism: a vertex permutation together with the
// color permutation it induces (c(gamma(e)) = color_perm(c(e)) for all e).
struct ColorRespectingAut {
  Perm vertex_map;
  Perm color_perm;
  friend bool operator==(const ColorRespectingAut&, const ColorRespectingAut&) = default;
  friend bool operator<(const ColorRespectingAut& a, const ColorRespectingAut& b) {
    return a.vertex_map != b.vertex_map ? a.vertex_map < b.vertex_map
                                        : a.color_perm < b.color_perm;
  }
};

// All color respecting isomorphisms from one properly colored graph onto
// another. A candidate is pinned down by the image of vertex 0 and a color
// permutation; the rest extends uniquely along edges. With to == from this
// enumerates Gamma_c. Budget bounds r! (default 10!).
std::vector<ColorRespectingAut> color_respecting_maps(const EdgeColoredGraph& from,
                                                      const EdgeColoredGraph& to,
                                                      bool identity_colors_only = false,
                                                      std::uint64_t max_color_perms = 3628800);

std::vector<ColorRespectingAut> color_respecting_group(const EdgeColoredGraph& g,
                                                       std::uint64_t max_color_perms = 3628800);
// The kernel of kappa: color respecting automorphisms with identity color
// permutation.
std::vector<ColorRespectingAut> color_preserving_group(const EdgeColoredGraph& g);

struct KappaResult {
  std::vector<Perm> image_elements;           // distinct color permutations, sorted
  std::vector<ColorRespectingAut> kernel;     // Gamma_p
  PermGroup image;                            // on the color set
};
// Splits Gamma_c along the color-permutation homomorphism and checks
// |Gamma_c| = |ker| * |im|.
KappaResult kappa(const std::vector<ColorRespectingAut>& group, int num_colors);

// The polytope automorphism (C, v) -> (color_perm(C), vertex_map(v)) as a
// permutation of the flat face ids of the built colorful polytope.
Perm lift_to_polytope(const ColorRespectingAut& aut, const ColorfulPoset& cp);

struct FlagOrbits {
  int count = 0;
  std::vector<int> orbit_of;          // flag index -> orbit id (by minimum flag)
  std::vector<int> representatives;   // minimum flag index per orbit, sorted
};
// Orbits of Gamma_c acting on the color flags of g.
FlagOrbits flag_orbits(const EdgeColoredGraph& g, const std::vector<ColorRespectingAut>& auts);

// Flag-transitivity of Gamma_c; cross-checked against vertex transitivity
// plus the vertex stabilizer inducing all of S_r on the colors.
bool is_regular(const EdgeColoredGraph& g, const std::vector<ColorRespectingAut>& auts);

}  // namespace colorful
