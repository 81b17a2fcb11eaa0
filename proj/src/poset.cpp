#include "colorful/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "colorful/error.hpp"

namespace colorful {

namespace {

// Fixed-size bitset over face ids.
struct Bits {
  std::vector<std::uint64_t> words;
  explicit Bits(int n = 0) : words((n + 63) / 64, 0) {}
  void set(int i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  void or_with(const Bits& o) {
    for (std::size_t w = 0; w < words.size(); ++w) words[w] |= o.words[w];
  }
};

}  // namespace

RankedPoset::RankedPoset(int rank, std::vector<std::vector<std::vector<int>>> covers)
    : rank_(rank), covers_(std::move(covers)) {
  if (rank_ < 0 || covers_.size() != static_cast<std::size_t>(rank_) + 1)
    throw DomainError(ErrorCode::NotAPolytope, "cover table does not match rank");
  for (int j = 0; j <= rank_; ++j) {
    int below = j == 0 ? 0 : num_faces(j - 1);
    for (auto& list : covers_[j]) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      if (j == 0 && !list.empty())
        throw DomainError(ErrorCode::NotAPolytope, "rank-0 face lists covered faces");
      for (int idx : list)
        if (idx < 0 || idx >= below)
          throw DomainError(ErrorCode::NotAPolytope, "cover index out of range");
    }
  }
  covered_by_.assign(rank_ + 1, {});
  for (int j = 0; j <= rank_; ++j) covered_by_[j].assign(num_faces(j), {});
  for (int j = 1; j <= rank_; ++j)
    for (int k = 0; k < num_faces(j); ++k)
      for (int idx : covers_[j][k]) covered_by_[j - 1][idx].push_back(k);
}

int RankedPoset::total_faces() const {
  int n = 0;
  for (int j = 0; j <= rank_; ++j) n += num_faces(j);
  return n;
}

int RankedPoset::face_offset(int j) const {
  int n = 0;
  for (int i = 0; i < j; ++i) n += num_faces(i);
  return n;
}

std::vector<int> RankedPoset::f_vector() const {
  std::vector<int> f;
  for (int j = 0; j <= rank_; ++j) f.push_back(num_faces(j));
  return f;
}

RankedPoset parse_poset(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int rank = -1;
  std::vector<std::vector<std::vector<int>>> covers;
  std::vector<std::vector<bool>> present;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls{line};
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "rank") {
      if (rank >= 0 || !(ls >> rank) || rank < 0)
        throw DomainError(ErrorCode::MalformedLine, "line " + std::to_string(lineno) + ": bad rank");
      covers.resize(rank + 1);
      present.resize(rank + 1);
      continue;
    }
    if (head != "f" || rank < 0)
      throw DomainError(ErrorCode::MalformedLine,
                        "line " + std::to_string(lineno) + ": expected rank or face line");
    int j, k;
    std::string colon;
    if (!(ls >> j >> k >> colon) || colon != ":" || j < 0 || j > rank || k < 0)
      throw DomainError(ErrorCode::MalformedLine, "line " + std::to_string(lineno) + ": bad face");
    if (static_cast<std::size_t>(k) >= covers[j].size()) {
      covers[j].resize(k + 1);
      present[j].resize(k + 1, false);
    }
    if (present[j][k])
      throw DomainError(ErrorCode::MalformedLine,
                        "line " + std::to_string(lineno) + ": face repeated");
    present[j][k] = true;
    int idx;
    while (ls >> idx) covers[j][k].push_back(idx);
    if (!ls.eof())
      throw DomainError(ErrorCode::MalformedLine, "line " + std::to_string(lineno) + ": bad index");
  }
  if (rank < 0) throw DomainError(ErrorCode::MalformedLine, "missing rank line");
  for (int j = 0; j <= rank; ++j)
    for (std::size_t k = 0; k < present[j].size(); ++k)
      if (!present[j][k])
        throw DomainError(ErrorCode::MalformedLine,
                          "face " + std::to_string(j) + " " + std::to_string(k) + " missing");
  return RankedPoset(rank, std::move(covers));
}

std::string serialize_poset(const RankedPoset& p) {
  std::string out = "rank " + std::to_string(p.rank()) + "\n";
  for (int j = 0; j <= p.rank(); ++j)
    for (int k = 0; k < p.num_faces(j); ++k) {
      out += "f " + std::to_string(j) + " " + std::to_string(k) + " :";
      for (int idx : p.covers_of(j, k)) out += " " + std::to_string(idx);
      out += "\n";
    }
  return out;
}

namespace {

// Downsets / upsets as bitsets over flat ids (a face is in its own set).
std::vector<Bits> downsets(const RankedPoset& p) {
  int total = p.total_faces();
  std::vector<Bits> down(total, Bits(total));
  for (int j = 0; j <= p.rank(); ++j) {
    int off = p.face_offset(j);
    for (int k = 0; k < p.num_faces(j); ++k) {
      Bits& d = down[off + k];
      d.set(off + k);
      if (j > 0) {
        int below = p.face_offset(j - 1);
        for (int idx : p.covers_of(j, k)) d.or_with(down[below + idx]);
      }
    }
  }
  return down;
}

// Flags of the open section between lower and upper (flat ids; lower may be
// -1 for the implicit least face, upper must be a real face). Each flag is
// the vector of flat ids at ranks lo+1 .. hi-1.
struct SectionContext {
  const RankedPoset& p;
  const std::vector<Bits>& down;
  int lower, upper;        // flat ids; lower == -1 means the implicit face
  int lo_rank, hi_rank;    // ranks of lower/upper
  std::vector<int> rank_of, index_of;
};

void collect_section_flags(const SectionContext& ctx, int rank, int current_flat,
                           std::vector<int>& chain, std::vector<std::vector<int>>& out,
                           std::size_t cap) {
  if (rank == ctx.lo_rank + 1) {
    // chain holds faces at ranks hi-1 down to lo+1; reverse into flag order.
    out.emplace_back(chain.rbegin(), chain.rend());
    if (out.size() > cap)
      throw DomainError(ErrorCode::ScaleExceeded, "section flag enumeration exceeds budget");
    return;
  }
  int j = ctx.rank_of[current_flat];
  int below_off = ctx.p.face_offset(j - 1);
  for (int idx : ctx.p.covers_of(j, ctx.index_of[current_flat])) {
    int flat = below_off + idx;
    if (ctx.lower >= 0 && !ctx.down[flat].test(ctx.lower)) continue;
    chain.push_back(flat);
    collect_section_flags(ctx, rank - 1, flat, chain, out, cap);
    chain.pop_back();
  }
}

// Connectivity of the flag-adjacency graph of a section; flags differ in
// exactly one face and the shared neighbours are recomputed locally.
bool section_flag_connected(const SectionContext& ctx) {
  std::vector<std::vector<int>> section_flags;
  std::vector<int> chain;
  if (ctx.hi_rank - ctx.lo_rank < 2) return true;
  collect_section_flags(ctx, ctx.hi_rank, ctx.upper, chain, section_flags, 2000000);
  if (section_flags.empty()) return false;  // no chain spans the section
  std::map<std::vector<int>, int> id_of;
  for (std::size_t i = 0; i < section_flags.size(); ++i) id_of[section_flags[i]] = (int)i;
  std::vector<int> seen(section_flags.size(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  int len = ctx.hi_rank - ctx.lo_rank - 1;
  while (!queue.empty()) {
    int f = queue.back();
    queue.pop_back();
    std::vector<int> flag = section_flags[f];
    for (int t = 0; t < len; ++t) {
      int rank_t = ctx.lo_rank + 1 + t;
      int upper_flat = t + 1 < len ? flag[t + 1] : ctx.upper;
      int lower_flat = t > 0 ? flag[t - 1] : ctx.lower;
      int below_off = ctx.p.face_offset(rank_t);
      for (int idx : ctx.p.covers_of(ctx.rank_of[upper_flat], ctx.index_of[upper_flat])) {
        int cand = below_off + idx;
        if (cand == flag[t]) continue;
        if (lower_flat >= 0 && !ctx.down[cand].test(lower_flat)) continue;
        std::vector<int> other = flag;
        other[t] = cand;
        auto it = id_of.find(other);
        if (it != id_of.end() && !seen[it->second]) {
          seen[it->second] = 1;
          ++reached;
          queue.push_back(it->second);
        }
      }
    }
  }
  return reached == section_flags.size();
}

}  // namespace

PolytopeReport validate_polytope(const RankedPoset& p, int max_faces) {
  if (p.total_faces() > max_faces)
    throw DomainError(ErrorCode::ScaleExceeded,
                      "poset has " + std::to_string(p.total_faces()) + " faces, budget " +
                          std::to_string(max_faces));
  PolytopeReport report;
  auto fail = [&report](std::string msg) {
    if (report.failures.size() < 20) report.failures.push_back(std::move(msg));
  };
  int n = p.rank();

  report.unique_min_max = p.num_faces(n) == 1;
  if (!report.unique_min_max)
    fail("unique-min-max: " + std::to_string(p.num_faces(n)) + " faces at rank " +
         std::to_string(n));

  report.rank_chains = true;
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k < p.num_faces(j); ++k) {
      if (j < n && p.covered_by(j, k).empty()) {
        report.rank_chains = false;
        fail("rank-chains: face (" + std::to_string(j) + "," + std::to_string(k) +
             ") has no covering face");
      }
      if (j >= 1 && p.covers_of(j, k).empty()) {
        report.rank_chains = false;
        fail("rank-chains: face (" + std::to_string(j) + "," + std::to_string(k) +
             ") covers nothing");
      }
    }
  if (n >= 0 && p.num_faces(0) == 0) report.rank_chains = false;

  report.diamond = true;
  // Middle rank 0: sections between the implicit face and a rank-1 face.
  for (int k = 0; n >= 1 && k < p.num_faces(1); ++k)
    if (p.covers_of(1, k).size() != 2) {
      report.diamond = false;
      fail("diamond: edge (1," + std::to_string(k) + ") has " +
           std::to_string(p.covers_of(1, k).size()) + " vertices");
    }
  for (int m = 1; m <= n - 1; ++m)
    for (int g = 0; g < p.num_faces(m + 1); ++g) {
      std::map<int, int> tally;
      for (int h : p.covers_of(m + 1, g))
        for (int f : p.covers_of(m, h)) ++tally[f];
      for (auto [f, count] : tally)
        if (count != 2) {
          report.diamond = false;
          fail("diamond: faces (" + std::to_string(m - 1) + "," + std::to_string(f) + ") < (" +
               std::to_string(m + 1) + "," + std::to_string(g) + ") have " +
               std::to_string(count) + " middle faces");
        }
    }

  // Strong flag-connectedness: every section of rank >= 2 (including the
  // whole poset over the implicit least face) has a connected flag graph.
  report.strongly_flag_connected = true;
  if (report.rank_chains && report.unique_min_max) {
    std::vector<Bits> down = downsets(p);
    int total = p.total_faces();
    std::vector<int> rank_of(total), index_of(total);
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k < p.num_faces(j); ++k) {
        rank_of[p.face_offset(j) + k] = j;
        index_of[p.face_offset(j) + k] = k;
      }
    for (int hi = 2; hi <= n && report.strongly_flag_connected; ++hi)
      for (int g = 0; g < p.num_faces(hi) && report.strongly_flag_connected; ++g) {
        int upper = p.face_offset(hi) + g;
        // lower = implicit face.
        SectionContext ctx{p, down, -1, upper, -1, hi, rank_of, index_of};
        if (!section_flag_connected(ctx)) {
          report.strongly_flag_connected = false;
          fail("flag-connectivity: section below (" + std::to_string(hi) + "," +
               std::to_string(g) + ") disconnected");
          break;
        }
        for (int lo = 0; lo + 3 <= hi; ++lo)
          for (int f = 0; f < p.num_faces(lo); ++f) {
            int lower = p.face_offset(lo) + f;
            if (!down[upper].test(lower)) continue;
            SectionContext sctx{p, down, lower, upper, lo, hi, rank_of, index_of};
            if (!section_flag_connected(sctx)) {
              report.strongly_flag_connected = false;
              fail("flag-connectivity: section (" + std::to_string(lo) + "," +
                   std::to_string(f) + ") / (" + std::to_string(hi) + "," + std::to_string(g) +
                   ") disconnected");
              break;
            }
          }
      }
  } else {
    report.strongly_flag_connected = false;
  }
  return report;
}

std::vector<ChainFlag> flags(const RankedPoset& p) {
  std::vector<ChainFlag> out;
  int n = p.rank();
  if (p.num_faces(n) == 0) return out;
  ChainFlag chain(n + 1, -1);
  // DFS downward from each top face (a valid polytope has exactly one).
  std::function<void(int, int)> descend = [&](int j, int k) {
    chain[j] = k;
    if (j == 0) {
      out.push_back(chain);
      return;
    }
    for (int idx : p.covers_of(j, k)) descend(j - 1, idx);
  };
  for (int k = 0; k < p.num_faces(n); ++k) descend(n, k);
  std::sort(out.begin(), out.end());
  return out;
}

ChainFlag flag_adjacent(const RankedPoset& p, const ChainFlag& f, int i) {
  int n = p.rank();
  if (i < 0 || i > n - 1)
    throw DomainError(ErrorCode::NotAPolytope, "flag adjacency rank out of range");
  int other = -1, count = 0;
  for (int idx : p.covers_of(i + 1, f[i + 1])) {
    if (i > 0) {
      const auto& below = p.covers_of(i, idx);
      if (!std::binary_search(below.begin(), below.end(), f[i - 1])) continue;
    }
    ++count;
    if (idx != f[i]) other = idx;
  }
  if (count != 2 || other == -1)
    throw DomainError(ErrorCode::NotAPolytope,
                      "diamond fails at rank " + std::to_string(i) + ": " +
                          std::to_string(count) + " middle faces");
  ChainFlag g = f;
  g[i] = other;
  return g;
}

RankedPoset dual(const RankedPoset& p) {
  int n = p.rank();
  if (p.num_faces(n) != 1)
    throw DomainError(ErrorCode::NotAPolytope, "dual requires a unique maximal face");
  if (n == 0) return p;
  std::vector<std::vector<std::vector<int>>> covers(n + 1);
  covers[0].assign(p.num_faces(n - 1), {});
  for (int j = 1; j <= n - 1; ++j) {
    int src = n - 1 - j;  // p-rank whose faces sit at dual rank j
    covers[j].resize(p.num_faces(src));
    for (int k = 0; k < p.num_faces(src); ++k) covers[j][k] = p.covered_by(src, k);
  }
  std::vector<int> all(p.num_faces(0));
  for (int k = 0; k < p.num_faces(0); ++k) all[k] = k;
  covers[n].push_back(std::move(all));
  return RankedPoset(n, std::move(covers));
}

namespace {

// Joint Weisfeiler-Leman-style refinement over the Hasse diagrams of p and q;
// comparable labels prune the isomorphism backtracking.
std::pair<std::vector<int>, std::vector<int>> joint_labels(const RankedPoset& p,
                                                           const RankedPoset& q) {
  auto initial = [](const RankedPoset& poset) {
    std::vector<std::vector<long long>> sig;
    for (int j = 0; j <= poset.rank(); ++j)
      for (int k = 0; k < poset.num_faces(j); ++k)
        sig.push_back({j, (long long)poset.covers_of(j, k).size(),
                       (long long)poset.covered_by(j, k).size()});
    return sig;
  };
  auto sig_p = initial(p), sig_q = initial(q);
  std::vector<int> lab_p(sig_p.size()), lab_q(sig_q.size());
  auto canonize = [&]() {
    std::map<std::vector<long long>, int> dict;
    for (const auto& s : sig_p) dict.emplace(s, 0);
    for (const auto& s : sig_q) dict.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : dict) id = next++;
    for (std::size_t i = 0; i < sig_p.size(); ++i) lab_p[i] = dict.at(sig_p[i]);
    for (std::size_t i = 0; i < sig_q.size(); ++i) lab_q[i] = dict.at(sig_q[i]);
    return next;
  };
  int classes = canonize();
  for (int round = 0; round < 16; ++round) {
    auto refine = [](const RankedPoset& poset, const std::vector<int>& lab) {
      std::vector<std::vector<long long>> sig;
      for (int j = 0; j <= poset.rank(); ++j)
        for (int k = 0; k < poset.num_faces(j); ++k) {
          int flat = poset.face_offset(j) + k;
          std::vector<long long> s{lab[flat]};
          std::vector<long long> lower, upper;
          for (int idx : poset.covers_of(j, k)) lower.push_back(lab[poset.face_offset(j - 1) + idx]);
          for (int idx : poset.covered_by(j, k))
            upper.push_back(lab[poset.face_offset(j + 1) + idx]);
          std::sort(lower.begin(), lower.end());
          std::sort(upper.begin(), upper.end());
          s.push_back(-1);
          s.insert(s.end(), lower.begin(), lower.end());
          s.push_back(-2);
          s.insert(s.end(), upper.begin(), upper.end());
          sig.push_back(std::move(s));
        }
      return sig;
    };
    sig_p = refine(p, lab_p);
    sig_q = refine(q, lab_q);
    int next = canonize();
    if (next == classes) break;
    classes = next;
  }
  return {lab_p, lab_q};
}

struct IsoSearch {
  const RankedPoset& p;
  const RankedPoset& q;
  std::vector<int> lab_p, lab_q;
  std::map<std::pair<int, int>, int> pair_count_q;  // skeleton edge multiplicities in q
  std::map<std::pair<int, int>, int> pair_count_p;
  // Per rank of q: cover-key -> face indices with exactly that cover set.
  std::vector<std::map<std::vector<int>, std::vector<int>>> by_cover_q;
  std::vector<Perm> results;
  std::vector<std::vector<int>> image;  // per rank: index -> q index or -1
  std::vector<std::vector<char>> used;  // per rank of q

  IsoSearch(const RankedPoset& pp, const RankedPoset& qq) : p(pp), q(qq) {
    auto [lp, lq] = joint_labels(p, q);
    lab_p = std::move(lp);
    lab_q = std::move(lq);
    by_cover_q.resize(q.rank() + 1);
    for (int j = 1; j <= q.rank(); ++j)
      for (int k = 0; k < q.num_faces(j); ++k) by_cover_q[j][q.covers_of(j, k)].push_back(k);
    auto pairs = [](const RankedPoset& poset, std::map<std::pair<int, int>, int>& out) {
      if (poset.rank() < 1) return;
      for (int k = 0; k < poset.num_faces(1); ++k) {
        const auto& vs = poset.covers_of(1, k);
        if (vs.size() == 2) ++out[{vs[0], vs[1]}];
      }
    };
    pairs(p, pair_count_p);
    pairs(q, pair_count_q);
    image.resize(p.rank() + 1);
    used.resize(p.rank() + 1);
    for (int j = 0; j <= p.rank(); ++j) {
      image[j].assign(p.num_faces(j), -1);
      used[j].assign(q.num_faces(j), 0);
    }
  }

  int edge_mult(const std::map<std::pair<int, int>, int>& counts, int a, int b) const {
    auto it = counts.find(std::minmax(a, b));
    return it == counts.end() ? 0 : it->second;
  }

  void record() {
    Perm flat(p.total_faces());
    for (int j = 0; j <= p.rank(); ++j)
      for (int k = 0; k < p.num_faces(j); ++k)
        flat[p.face_offset(j) + k] = q.face_offset(j) + image[j][k];
    results.push_back(std::move(flat));
  }

  void extend(int j, int k) {
    if (j > p.rank()) {
      record();
      return;
    }
    if (k == p.num_faces(j)) {
      extend(j + 1, 0);
      return;
    }
    int flat_p = p.face_offset(j) + k;
    if (j == 0) {
      for (int cand = 0; cand < q.num_faces(0); ++cand) {
        if (used[0][cand] || lab_q[q.face_offset(0) + cand] != lab_p[flat_p]) continue;
        bool ok = true;
        for (int prev = 0; prev < k && ok; ++prev)
          if (edge_mult(pair_count_p, prev, k) != edge_mult(pair_count_q, image[0][prev], cand))
            ok = false;
        if (!ok) continue;
        image[0][k] = cand;
        used[0][cand] = 1;
        extend(j, k + 1);
        used[0][cand] = 0;
        image[0][k] = -1;
      }
      return;
    }
    std::vector<int> key;
    key.reserve(p.covers_of(j, k).size());
    for (int idx : p.covers_of(j, k)) key.push_back(image[j - 1][idx]);
    std::sort(key.begin(), key.end());
    auto it = by_cover_q[j].find(key);
    if (it == by_cover_q[j].end()) return;
    for (int cand : it->second) {
      if (used[j][cand] || lab_q[q.face_offset(j) + cand] != lab_p[flat_p]) continue;
      image[j][k] = cand;
      used[j][cand] = 1;
      extend(j, k + 1);
      used[j][cand] = 0;
      image[j][k] = -1;
    }
  }
};

}  // namespace

std::vector<Perm> poset_isomorphisms(const RankedPoset& p, const RankedPoset& q) {
  if (p.rank() != q.rank() || p.f_vector() != q.f_vector()) return {};
  IsoSearch search(p, q);
  search.extend(0, 0);
  std::sort(search.results.begin(), search.results.end());
  return search.results;
}

std::vector<Perm> poset_automorphism_maps(const RankedPoset& p, int max_faces) {
  if (p.total_faces() > max_faces)
    throw DomainError(ErrorCode::ScaleExceeded,
                      "poset has " + std::to_string(p.total_faces()) + " faces, budget " +
                          std::to_string(max_faces));
  return poset_isomorphisms(p, p);
}

PermGroup poset_automorphisms(const RankedPoset& p, int max_faces) {
  return PermGroup(p.total_faces(), poset_automorphism_maps(p, max_faces));
}

std::vector<Perm> dualities(const RankedPoset& p) {
  RankedPoset d = dual(p);
  std::vector<Perm> out;
  int n = p.rank();
  int proper = p.face_offset(n);  // faces of ranks 0..n-1
  for (const Perm& iso : poset_isomorphisms(p, d)) {
    Perm map(proper);
    for (int j = 0; j <= n - 1; ++j)
      for (int k = 0; k < p.num_faces(j); ++k) {
        int dual_index = iso[p.face_offset(j) + k] - d.face_offset(j);
        map[p.face_offset(j) + k] = p.face_offset(n - 1 - j) + dual_index;
      }
    out.push_back(std::move(map));
  }
  std::sort(out.begin(), out.end());
  return out;
}

LayerGraph face_layer_graph(const RankedPoset& p, int i) {
  if (i < 0 || i > p.rank() - 2)
    throw DomainError(ErrorCode::NotAPolytope, "layer index out of range");
  LayerGraph g;
  g.lower_count = p.num_faces(i);
  g.upper_count = p.num_faces(i + 1);
  for (int k = 0; k < p.num_faces(i + 1); ++k)
    for (int idx : p.covers_of(i + 1, k)) g.incidences.emplace_back(idx, k);
  std::sort(g.incidences.begin(), g.incidences.end());
  return g;
}

bool is_complete_bipartite(const LayerGraph& graph) {
  return static_cast<long long>(graph.incidences.size()) ==
         static_cast<long long>(graph.lower_count) * graph.upper_count;
}

}  // namespace colorful
