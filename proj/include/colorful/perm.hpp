#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace colorful {

// A permutation of {0,...,n-1}, stored as its image table.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// compose(a, b): apply b first, then a.
inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

inline Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

inline bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline bool is_involution(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[p[i]] != static_cast<int>(i)) return false;
  return true;
}

}  // namespace colorful
