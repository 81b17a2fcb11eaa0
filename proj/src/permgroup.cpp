#include "colorful/permgroup.hpp"

#include <algorithm>
#include <set>

#include "colorful/error.hpp"

namespace colorful {

namespace {

int smallest_moved_point(const std::vector<Perm>& gens, int degree) {
  for (int x = 0; x < degree; ++x)
    for (const Perm& g : gens)
      if (g[x] != x) return x;
  return -1;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  build_chain();
}

void PermGroup::recompute_transversal(std::size_t level) {
  Level& lv = levels_[level];
  lv.transversal.clear();
  lv.transversal[lv.base] = identity_perm(degree_);
  std::vector<int> queue{lv.base};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int x = queue[k];
    for (const Perm& g : lv.gens) {
      int y = g[x];
      if (!lv.transversal.count(y)) {
        lv.transversal[y] = compose(g, lv.transversal[x]);
        queue.push_back(y);
      }
    }
  }
}

void PermGroup::build_chain() {
  // Plain Schreier-Sims: peel off one base point per level and hand all
  // (deduplicated) Schreier generators to the next level. Quadratic in the
  // group order in the worst case, which is fine at this scale.
  levels_.clear();
  std::set<Perm> pool;
  for (const Perm& g : generators_)
    if (!is_identity(g)) pool.insert(g);

  while (!pool.empty()) {
    Level lv;
    lv.gens.assign(pool.begin(), pool.end());
    lv.base = smallest_moved_point(lv.gens, degree_);
    levels_.push_back(std::move(lv));
    recompute_transversal(levels_.size() - 1);

    const Level& cur = levels_.back();
    std::set<Perm> next;
    for (const auto& [x, tx] : cur.transversal)
      for (const Perm& g : cur.gens) {
        const Perm& ty = cur.transversal.at(g[x]);
        Perm schreier = compose(inverse(ty), compose(g, tx));
        if (!is_identity(schreier)) next.insert(std::move(schreier));
      }
    pool = std::move(next);
  }
}

Perm PermGroup::sift(Perm p, std::size_t level) const {
  for (std::size_t i = level; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    int x = p[lv.base];
    if (x == lv.base) continue;
    auto it = lv.transversal.find(x);
    if (it == lv.transversal.end()) return p;
    p = compose(inverse(it->second), p);
  }
  return p;
}

std::uint64_t PermGroup::order() const {
  std::uint64_t n = 1;
  for (const Level& lv : levels_) {
    std::uint64_t k = lv.transversal.size();
    if (n > (~std::uint64_t{0}) / k)
      throw DomainError(ErrorCode::ScaleExceeded, "group order overflows 64 bits");
    n *= k;
  }
  return n;
}

bool PermGroup::contains(const Perm& p) const {
  if (static_cast<int>(p.size()) != degree_) return false;
  return is_identity(sift(p, 0));
}

std::vector<Perm> PermGroup::elements(std::uint64_t max_count) const {
  if (order() > max_count)
    throw DomainError(ErrorCode::ScaleExceeded,
                      "group has more than " + std::to_string(max_count) + " elements");
  std::vector<Perm> out{identity_perm(degree_)};
  // Product over the chain: stabilizer elements first, then coset reps.
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Perm> next;
    next.reserve(out.size() * levels_[i].transversal.size());
    for (const auto& [pt, rep] : levels_[i].transversal)
      for (const Perm& e : out) next.push_back(compose(rep, e));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<int> seen(degree_, 0);
  std::vector<std::vector<int>> out;
  for (int v = 0; v < degree_; ++v) {
    if (seen[v]) continue;
    std::vector<int> orbit{v};
    seen[v] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const Perm& g : generators_) {
        int y = g[orbit[k]];
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace colorful
