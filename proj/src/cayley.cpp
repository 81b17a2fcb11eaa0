#include "colorful/cayley.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "colorful/autgroup.hpp"
#include "colorful/error.hpp"

namespace colorful {

Perm GenGroup::mul(const Perm& a, const Perm& b) const {
  // Left-action realizations compose a after b; right-action ones flip.
  return right_action ? compose(b, a) : compose(a, b);
}

GenGroup sym_group_transpositions(const SimpleGraph& G) {
  GenGroup group;
  group.degree = G.num_vertices;
  std::uint64_t factorial = 1;
  for (int i = 2; i <= G.num_vertices; ++i) factorial *= i;
  group.expected_order = factorial;
  for (auto [u, v] : G.edges) {
    Perm t = identity_perm(G.num_vertices);
    std::swap(t[u], t[v]);
    group.generators.push_back(std::move(t));
    group.generator_names.push_back(G.vertex_names[u] + "-" + G.vertex_names[v]);
  }
  if (G.num_vertices <= 9) {
    group.element_name = [](const Perm& p, int) {
      std::string s;
      for (int x : p) s += static_cast<char>('1' + x);
      return s;
    };
  }
  return group;
}

GenGroup elementary_abelian_2(int n) {
  GenGroup group;
  group.degree = 2 * n;
  group.expected_order = std::uint64_t{1} << n;
  for (int i = 0; i < n; ++i) {
    Perm t = identity_perm(2 * n);
    std::swap(t[2 * i], t[2 * i + 1]);
    group.generators.push_back(std::move(t));
    group.generator_names.push_back("g" + std::to_string(i));
  }
  group.element_name = [n](const Perm& p, int) {
    std::string s;
    for (int i = 0; i < n; ++i) s += p[2 * i] == 2 * i ? '0' : '1';
    return s;
  };
  return group;
}

int CayleyGraph::element_id(const Perm& p) const {
  auto it = std::lower_bound(
      sorted_ids.begin(), sorted_ids.end(), p,
      [this](int id, const Perm& key) { return elements[id] < key; });
  if (it == sorted_ids.end() || !(elements[*it] == p))
    throw DomainError(ErrorCode::NotAPolytope, "permutation is not a group element");
  return *it;
}

CayleyGraph cayley_graph(const GenGroup& G, std::uint64_t max_vertices) {
  int n = static_cast<int>(G.generators.size());
  for (int i = 0; i < n; ++i) {
    const Perm& t = G.generators[i];
    if (is_identity(t) || !is_involution(t))
      throw DomainError(ErrorCode::NotInvolution,
                        "generator " + std::to_string(i) + " is not a non-trivial involution");
    for (int j = i + 1; j < n; ++j)
      if (t == G.generators[j])
        throw DomainError(ErrorCode::NotInvolution,
                          "generators " + std::to_string(i) + " and " + std::to_string(j) +
                              " coincide");
  }

  CayleyGraph cg;
  cg.group = G;
  std::map<Perm, int> id_of;
  cg.elements.push_back(identity_perm(G.degree));
  id_of[cg.elements[0]] = 0;
  std::vector<EdgeList> edges;
  for (std::size_t k = 0; k < cg.elements.size(); ++k) {
    Perm u = cg.elements[k];  // copy: elements may reallocate below
    for (int i = 0; i < n; ++i) {
      Perm v = G.mul(G.generators[i], u);
      auto [it, fresh] = id_of.emplace(std::move(v), static_cast<int>(cg.elements.size()));
      if (fresh) {
        if (cg.elements.size() >= max_vertices)
          throw DomainError(ErrorCode::ScaleExceeded,
                            "group has more than " + std::to_string(max_vertices) + " elements");
        cg.elements.push_back(it->first);
      }
      if (static_cast<int>(k) < it->second) edges.push_back({static_cast<int>(k), it->second, i});
    }
  }
  if (G.expected_order && *G.expected_order != cg.elements.size())
    throw DomainError(ErrorCode::DoesNotGenerate,
                      "generators produce " + std::to_string(cg.elements.size()) +
                          " elements, expected " + std::to_string(*G.expected_order));

  std::vector<std::string> vertex_names;
  for (std::size_t k = 0; k < cg.elements.size(); ++k)
    vertex_names.push_back(G.element_name ? G.element_name(cg.elements[k], (int)k)
                                          : "g" + std::to_string(k));
  std::vector<std::string> color_names = G.generator_names;
  if (color_names.empty())
    for (int i = 0; i < n; ++i) color_names.push_back("t" + std::to_string(i));

  cg.graph = build_graph(static_cast<int>(cg.elements.size()), n, edges,
                         std::move(vertex_names), std::move(color_names));
  cg.sorted_ids.resize(cg.elements.size());
  for (std::size_t k = 0; k < cg.elements.size(); ++k) cg.sorted_ids[k] = static_cast<int>(k);
  std::sort(cg.sorted_ids.begin(), cg.sorted_ids.end(),
            [&cg](int a, int b) { return cg.elements[a] < cg.elements[b]; });
  return cg;
}

std::vector<GenSetAut> aut_gamma_T(const CayleyGraph& cg) {
  const GenGroup& G = cg.group;
  int n = static_cast<int>(G.generators.size());
  int count = static_cast<int>(cg.elements.size());
  std::vector<GenSetAut> out;

  Perm pi = identity_perm(n);
  do {
    // Extend tau_i -> tau_pi(i) from the identity along the Cayley graph;
    // word consistency is exactly edge consistency here.
    Perm image(count, -1);
    image[0] = 0;
    bool ok = true;
    std::vector<int> queue{0};
    while (ok && !queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (int i = 0; i < n; ++i) {
        int v = cg.graph.neighbor(u, i);
        int gv = cg.graph.neighbor(image[u], pi[i]);
        if (image[v] == -1) {
          image[v] = gv;
          queue.push_back(v);
        } else if (image[v] != gv) {
          ok = false;
          break;
        }
      }
    }
    if (ok) out.push_back(GenSetAut{std::move(image), pi});
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

SemidirectReport check_semidirect(const GenGroup& G, std::uint64_t max_vertices,
                                  std::uint64_t max_color_perms) {
  CayleyGraph cg = cayley_graph(G, max_vertices);
  SemidirectReport report;
  report.group_order = cg.elements.size();
  std::vector<GenSetAut> auts = aut_gamma_T(cg);
  report.aut_order = auts.size();
  std::vector<ColorRespectingAut> gamma_c = color_respecting_group(cg.graph, max_color_perms);
  report.gamma_c_order = gamma_c.size();
  report.order_product = report.gamma_c_order == report.group_order * report.aut_order;

  // Right multiplication u -> u g^{-1}, one vertex permutation per element.
  int count = static_cast<int>(cg.elements.size());
  std::set<Perm> hat;
  for (int gi = 0; gi < count; ++gi) {
    Perm ginv = inverse(cg.elements[gi]);
    Perm vertex_map(count);
    for (int u = 0; u < count; ++u)
      vertex_map[u] = cg.element_id(G.mul(cg.elements[u], ginv));
    hat.insert(std::move(vertex_map));
  }

  report.normal = true;
  for (const auto& aut : gamma_c) {
    Perm inv_vm = inverse(aut.vertex_map);
    for (const Perm& h : hat) {
      Perm conj = compose(aut.vertex_map, compose(h, inv_vm));
      if (!hat.count(conj)) {
        report.normal = false;
        break;
      }
    }
    if (!report.normal) break;
  }

  report.trivial_intersection = true;
  for (const auto& d : aut_gamma_T(cg))
    if (!is_identity(d.vertex_map) && hat.count(d.vertex_map)) {
      report.trivial_intersection = false;
      break;
    }
  return report;
}

CayleyGraph graphicahedron_graph(const SimpleGraph& G, std::uint64_t max_vertices) {
  // T_G generates S_p exactly when G is connected; the expected-order check
  // turns a disconnected input into DoesNotGenerate.
  return cayley_graph(sym_group_transpositions(G), max_vertices);
}

}  // namespace colorful
