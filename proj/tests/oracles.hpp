#pragma once
// Brute-force reference implementations. They share no algorithmic code with
// the library and are only meant for tiny inputs.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "lhc/hypergraph.hpp"
#include "lhc/multigraph.hpp"

namespace oracle {

using lhc::Multigraph;
using lhc::SimpleGraph;

inline int find_root(std::vector<int>& p, int x) {
  while (p[x] != x) x = p[x];
  return x;
}

/// Components of the graph on `keep_vertex` using edges with keep_edge set.
inline std::vector<int> component_labels(const Multigraph& g, const std::vector<char>& keep_vertex,
                                         const std::vector<char>& keep_edge) {
  int n = g.num_vertices();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (!keep_edge[e]) continue;
    auto [u, v] = std::pair{g.edge(e).u, g.edge(e).v};
    if (!keep_vertex[u] || !keep_vertex[v]) continue;
    p[find_root(p, u)] = find_root(p, v);
  }
  std::vector<int> label(n, -1);
  for (int v = 0; v < n; ++v)
    if (keep_vertex[v]) label[v] = find_root(p, v);
  return label;
}

/// Minimum over edge subsets F whose removal leaves two components with >= r
/// edges each; -1 when none. Only for |E| <= 16.
inline int r_essential_edge_cut(const Multigraph& g, int r) {
  int m = g.num_edges(), n = g.num_vertices();
  int best = -1;
  std::vector<char> all_v(n, 1);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    int size = __builtin_popcount(mask);
    if (best >= 0 && size >= best) continue;
    std::vector<char> keep(m);
    for (int e = 0; e < m; ++e) keep[e] = !((mask >> e) & 1u);
    auto label = component_labels(g, all_v, keep);
    std::vector<int> edges_in(n, 0);
    for (int e = 0; e < m; ++e)
      if (keep[e]) ++edges_in[label[g.edge(e).u]];
    int big = 0;
    for (int v = 0; v < n; ++v)
      if (label[v] == v && edges_in[v] >= r) ++big;
    // components with zero vertices' edges still count as components (r = 0)
    if (big >= 2) best = size;
  }
  return best;
}

/// Minimum |X| such that G - X has two components with >= 2 vertices; -1 if none.
inline int essential_vertex_cut(const SimpleGraph& g) {
  int n = g.num_vertices();
  Multigraph mg = g.to_multigraph();
  std::vector<char> all_e(mg.num_edges(), 1);
  int best = -1;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (best >= 0 && size >= best) continue;
    std::vector<char> keep(n);
    for (int v = 0; v < n; ++v) keep[v] = !((mask >> v) & 1u);
    auto label = component_labels(mg, keep, all_e);
    std::vector<int> sz(n, 0);
    for (int v = 0; v < n; ++v)
      if (label[v] >= 0) ++sz[label[v]];
    int big = 0;
    for (int v = 0; v < n; ++v)
      if (sz[v] >= 2) ++big;
    if (big >= 2) best = size;
  }
  return best;
}

/// Hamilton path with optional ends by trying all permutations (n <= 9).
inline bool ham_path(const SimpleGraph& g, int a = -1, int b = -1) {
  int n = g.num_vertices();
  if (n == 0) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a >= 0 && perm.front() != a) continue;
    if (b >= 0 && perm.back() != b) continue;
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = g.adjacent(perm[i], perm[i + 1]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Plain DFS over all trails that start with e1 and end with e2 (no pruning, no memo).
inline bool dominating_trail(const Multigraph& g, int e1, int e2) {
  int m = g.num_edges(), n = g.num_vertices();
  std::vector<char> used(m, 0);
  std::vector<int> seq;
  bool found = false;
  auto dominating = [&](const std::vector<int>& vs) {
    std::vector<char> in(n, 0);
    for (size_t i = 1; i + 1 < vs.size(); ++i) in[vs[i]] = 1;
    for (const auto& e : g.edges())
      if (!in[e.u] && !in[e.v]) return false;
    return true;
  };
  std::function<void(int)> go = [&](int cur) {
    if (found) return;
    for (int e : g.incident(cur)) {
      if (used[e] || e == e1) continue;
      int nxt = g.edge(e).other(cur);
      used[e] = 1;
      seq.push_back(nxt);
      if (e == e2) {
        if (dominating(seq)) found = true;
      } else {
        go(nxt);
      }
      seq.pop_back();
      used[e] = 0;
      if (found) return;
    }
  };
  for (int start : {g.edge(e1).u, g.edge(e1).v}) {
    int second = g.edge(e1).other(start);
    used.assign(m, 0);
    used[e1] = 1;
    seq = {start, second};
    go(second);
    if (found) return true;
  }
  return false;
}

inline bool is_spanning_tree(const Multigraph& g, const std::vector<int>& edges) {
  int n = g.num_vertices();
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int e : edges) {
    int a = find_root(p, g.edge(e).u), b = find_root(p, g.edge(e).v);
    if (a == b) return false;
    p[a] = b;
  }
  return true;
}

/// Two edge-disjoint spanning trees by enumerating the first tree (|E| <= 14).
inline bool two_trees(const Multigraph& g) {
  int n = g.num_vertices(), m = g.num_edges();
  if (m < 2 * (n - 1)) return false;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != n - 1) continue;
    std::vector<int> t1, rest;
    for (int e = 0; e < m; ++e) ((mask >> e) & 1u ? t1 : rest).push_back(e);
    if (!oracle::is_spanning_tree(g, t1)) continue;
    // Remaining edges contain a spanning tree iff they connect all vertices.
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    int comps = n;
    for (int e : rest) {
      int a = find_root(p, g.edge(e).u), b = find_root(p, g.edge(e).v);
      if (a != b) {
        p[a] = b;
        --comps;
      }
    }
    if (comps == 1) return true;
  }
  return false;
}

/// Same vertex count and some permutation maps edge multiplicities onto each other (n <= 8).
inline bool isomorphic(const Multigraph& a, const Multigraph& b) {
  int n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = a.multiplicity(u, v) == b.multiplicity(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// A hypergraph admits a quasicycle iff some choice of pairs closes a cycle:
/// enumerate all quasigraphs and look for a used set forming a single circuit.
inline bool hypergraph_has_quasicycle(const lhc::Hypergraph3& h) {
  const auto& es = h.hyperedges();
  int m = static_cast<int>(es.size());
  // choice 0 = unused, 1..3 = one of the pairs
  std::vector<int> choice(m, 0);
  std::function<bool(int)> go = [&](int i) -> bool {
    if (i == m) {
      int n = h.num_vertices();
      std::vector<int> deg(n, 0);
      std::vector<std::pair<int, int>> pairs;
      for (int k = 0; k < m; ++k) {
        if (!choice[k]) continue;
        const auto& v = es[k].vertices;
        std::pair<int, int> p = es[k].size() == 2 ? std::pair{v[0], v[1]}
                                : choice[k] == 1 ? std::pair{v[0], v[1]}
                                : choice[k] == 2 ? std::pair{v[0], v[2]}
                                                 : std::pair{v[1], v[2]};
        pairs.push_back(p);
        ++deg[p.first];
        ++deg[p.second];
      }
      if (pairs.empty()) return false;
      for (int d : deg)
        if (d != 0 && d != 2) return false;
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      for (auto [a, b] : pairs) p[find_root(p, a)] = find_root(p, b);
      int root = find_root(p, pairs.front().first);
      for (int v = 0; v < n; ++v)
        if (deg[v] && find_root(p, v) != root) return false;
      return true;
    }
    int options = es[i].size() == 2 ? 1 : 3;
    for (int c = 0; c <= options; ++c) {
      choice[i] = c;
      if (go(i + 1)) return true;
    }
    return false;
  };
  return go(0);
}

}  // namespace oracle
