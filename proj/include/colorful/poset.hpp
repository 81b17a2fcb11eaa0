#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "colorful/permgroup.hpp"

namespace colorful {

// An abstract polytope candidate: faces listed per rank 0..n with the cover
// relation down to rank-1. The unique rank -1 face is implicit (every rank-0
// face covers it). Face ids are (rank, index); flat ids stack ranks 0..n.
class RankedPoset {
public:
  RankedPoset() = default;
  // covers[j][k] lists the rank j-1 faces covered by face k of rank j;
  // covers[0][k] must be empty. Lists are stored sorted.
  RankedPoset(int rank, std::vector<std::vector<std::vector<int>>> covers);

  int rank() const { return rank_; }
  int num_faces(int j) const { return static_cast<int>(covers_[j].size()); }
  int total_faces() const;                 // ranks 0..n
  int face_offset(int j) const;            // flat id of (j, 0)
  std::vector<int> f_vector() const;       // counts for ranks 0..n

  const std::vector<int>& covers_of(int j, int k) const { return covers_[j][k]; }
  const std::vector<int>& covered_by(int j, int k) const { return covered_by_[j][k]; }

  friend bool operator==(const RankedPoset&, const RankedPoset&) = default;

private:
  int rank_ = -1;
  std::vector<std::vector<std::vector<int>>> covers_;
  std::vector<std::vector<std::vector<int>>> covered_by_;
};

// Text format: "rank <n>" then one line per face
// "f <rank> <index> : <covered face indices at rank-1>"; the rank -1 face is
// implicit. serialize_poset(parse_poset(s)) == s for canonical s.
RankedPoset parse_poset(std::string_view text);
std::string serialize_poset(const RankedPoset& p);

struct PolytopeReport {
  bool unique_min_max = false;
  bool rank_chains = false;     // every maximal chain spans all ranks
  bool diamond = false;
  bool strongly_flag_connected = false;
  std::vector<std::string> failures;  // one line per detected failure (capped)

  bool valid() const {
    return unique_min_max && rank_chains && diamond && strongly_flag_connected;
  }
};

// Checks the abstract-polytope axioms. Strong flag-connectedness is decided
// by enumerating every section G/F of rank >= 2 and testing connectivity of
// its flag-adjacency graph.
PolytopeReport validate_polytope(const RankedPoset& p, int max_faces = 10000);

// A maximal chain: face index per rank 0..n (the rank -1 face is implicit).
using ChainFlag = std::vector<int>;

std::vector<ChainFlag> flags(const RankedPoset& p);  // sorted lexicographically
// The unique flag differing from f exactly in rank i (0 <= i <= n-1).
ChainFlag flag_adjacent(const RankedPoset& p, const ChainFlag& f, int i);

// Order-reversal: face (j, k) of p becomes face (n-1-j, k) of the dual for
// ranks 0..n-1; applying dual twice reproduces p exactly.
RankedPoset dual(const RankedPoset& p);

// All rank-preserving cover-preserving bijections p -> q as flat face maps,
// in lexicographic order. Empty when the posets are not isomorphic.
std::vector<Perm> poset_isomorphisms(const RankedPoset& p, const RankedPoset& q);

// Brute-force oracle: the full automorphism group as flat face permutations.
std::vector<Perm> poset_automorphism_maps(const RankedPoset& p, int max_faces = 10000);
PermGroup poset_automorphisms(const RankedPoset& p, int max_faces = 10000);

// Order-reversing bijections p -> p, as flat maps sending rank j to n-1-j.
// Empty when p is not self-dual.
std::vector<Perm> dualities(const RankedPoset& p);

struct LayerGraph {
  int lower_count = 0;  // faces of rank i
  int upper_count = 0;  // faces of rank i+1
  std::vector<std::pair<int, int>> incidences;
};
LayerGraph face_layer_graph(const RankedPoset& p, int i);
bool is_complete_bipartite(const LayerGraph& graph);

}  // namespace colorful
