#pragma once

#include <string>
#include <vector>

#include "colorful/poset.hpp"

namespace colorful {

// Classification of a rank-3 polytope as a closed surface map.
struct SurfaceReport {
  std::vector<int> f_vector;       // ranks 0..3
  long long euler = 0;             // V - E + F
  bool orientable = false;
  std::vector<int> face_sizes;     // sorted polygon sizes
  std::string surface_name;        // sphere, projective-plane, torus, ...
};

// Euler characteristic from the f-vector; orientability decided by
// bipartiteness of the flag graph and cross-checked by propagating coherent
// boundary orientations; name from the classification of closed surfaces.
SurfaceReport classify_surface(const RankedPoset& p);

// Both orientability routes, exposed separately for testing.
bool orientable_via_flag_graph(const RankedPoset& p);
bool orientable_via_face_orientations(const RankedPoset& p);

struct SchlafliType {
  bool uniform = false;            // all 2-faces q-gons and all vertices k-valent
  int q = 0, k = 0;
  std::vector<int> face_sizes;     // sorted
  std::vector<int> vertex_degrees; // sorted
  std::string to_string() const;   // "{q,k}" or "irregular faces={...} vertices={...}"
};
SchlafliType schlafli_type(const RankedPoset& p);

}  // namespace colorful
