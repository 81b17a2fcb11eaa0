#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "colorful/perm.hpp"

namespace colorful {

// Permutation group given by generators on {0,...,degree-1}.
// Order, membership and element enumeration go through a stabilizer chain
// (deterministic Schreier-Sims; bases are the smallest moved points).
class PermGroup {
public:
  PermGroup() : degree_(0) {}
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return generators_; }

  std::uint64_t order() const;
  bool contains(const Perm& p) const;

  // All elements, in a deterministic order. Throws ScaleExceeded when the
  // order is larger than max_count.
  std::vector<Perm> elements(std::uint64_t max_count = 100000) const;

  // Orbits of the generator action on points, each sorted, listed by minimum.
  std::vector<std::vector<int>> orbits() const;

private:
  struct Level {
    int base = -1;
    std::vector<Perm> gens;                // generators of this stabilizer
    std::map<int, Perm> transversal;       // point -> coset rep mapping base to it
  };

  void build_chain();
  void recompute_transversal(std::size_t level);
  // Returns the residue of sifting p through levels [level, ...).
  Perm sift(Perm p, std::size_t level) const;

  int degree_;
  std::vector<Perm> generators_;
  std::vector<Level> levels_;
};

}  // namespace colorful
