#include "lhc/connectivity.hpp"

#include <algorithm>
#include <set>

#include "flow.hpp"

namespace lhc {

using detail::FlowNetwork;

EdgeCut boundary(const Multigraph& g, std::span<const VertexId> x) {
  auto in = membership(g.num_vertices(), x);
  EdgeCut cut;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) cut.side.push_back(v);
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (in[g.edge(e).u] != in[g.edge(e).v]) cut.edges.push_back(e);
  }
  return cut;
}

namespace {

// Number of components of G - boundary(in) carrying at least r edges.
int count_heavy_components(const Multigraph& g, const std::vector<char>& in, int r) {
  const int n = g.num_vertices();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int heavy = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = s;
    std::vector<VertexId> stack{s};
    int edge_endpoints = 0;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.edge(e).other(v);
        if (in[w] != in[v]) continue;
        ++edge_endpoints;
        if (comp[w] < 0) {
          comp[w] = s;
          stack.push_back(w);
        }
      }
    }
    if (edge_endpoints / 2 >= r) ++heavy;
  }
  return heavy;
}

// Vertex sets of connected r-edge subgraphs, r in {0,1,2}, deduplicated.
std::vector<std::vector<VertexId>> anchor_groups(const Multigraph& g, int r) {
  std::set<std::vector<VertexId>> groups;
  if (r == 0) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) groups.insert({v});
  } else if (r == 1) {
    for (const Edge& e : g.edges()) groups.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  } else {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      auto inc = g.incident(v);
      for (size_t i = 0; i < inc.size(); ++i) {
        for (size_t j = i + 1; j < inc.size(); ++j) {
          std::vector<VertexId> s{v, g.edge(inc[i]).other(v), g.edge(inc[j]).other(v)};
          std::sort(s.begin(), s.end());
          s.erase(std::unique(s.begin(), s.end()), s.end());
          groups.insert(s);
        }
      }
    }
  }
  return {groups.begin(), groups.end()};
}

bool disjoint(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  for (VertexId x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) return false;
  }
  return true;
}

}  // namespace

bool is_r_essential_cut(const Multigraph& g, std::span<const VertexId> x, int r) {
  auto in = membership(g.num_vertices(), x);
  return count_heavy_components(g, in, r) >= 2;
}

std::optional<EdgeCut> min_r_essential_cut(const Multigraph& g, int r) {
  if (r < 0) throw GraphError("r must be nonnegative");
  const int n = g.num_vertices();
  if (r >= 3) {
    if (n > 22) throw GraphError("r >= 3 is only supported by subset enumeration (|V| <= 22)");
    std::optional<EdgeCut> best;
    const std::uint32_t full = n == 0 ? 0 : (1u << (n - 1));
    for (std::uint32_t mask = 0; mask < full; ++mask) {
      std::vector<char> in(static_cast<size_t>(n), 0);
      in[0] = 1;
      for (int i = 1; i < n; ++i) in[i] = (mask >> (i - 1)) & 1u;
      int size = 0;
      for (const Edge& e : g.edges()) size += in[e.u] != in[e.v] ? 1 : 0;
      if (best && size >= best->size()) continue;
      if (count_heavy_components(g, in, r) >= 2) {
        std::vector<VertexId> side;
        for (VertexId v = 0; v < n; ++v) {
          if (in[v]) side.push_back(v);
        }
        best = boundary(g, side);
      }
    }
    return best;
  }

  const auto groups = anchor_groups(g, r);
  std::optional<EdgeCut> best;
  for (size_t i = 0; i < groups.size(); ++i) {
    for (size_t j = i + 1; j < groups.size(); ++j) {
      if (!disjoint(groups[i], groups[j])) continue;
      FlowNetwork net(n + 2);
      const int s = n;
      const int t = n + 1;
      for (const Edge& e : g.edges()) net.add_arc(e.u, e.v, 1, 1);
      for (VertexId v : groups[i]) net.add_arc(s, v, FlowNetwork::kInfinite);
      for (VertexId v : groups[j]) net.add_arc(v, t, FlowNetwork::kInfinite);
      const int limit = best ? best->size() : FlowNetwork::kInfinite;
      const int flow = net.max_flow(s, t, limit);
      if (flow >= limit) continue;
      auto reach = net.residual_reachable(s);
      std::vector<VertexId> side;
      for (VertexId v = 0; v < n; ++v) {
        if (reach[v]) side.push_back(v);
      }
      best = boundary(g, side);
      if (best->size() == 0) return best;
    }
  }
  return best;
}

CutSize r_essential_edge_connectivity(const Multigraph& g, int r) {
  auto cut = min_r_essential_cut(g, r);
  return cut ? CutSize(cut->size()) : CutSize::infinite();
}

CutSize r_essential_edge_connectivity_exhaustive(const Multigraph& g, int r) {
  const int n = g.num_vertices();
  if (n > 22) throw GraphError("subset enumeration limited to 22 vertices");
  if (n == 0) return CutSize::infinite();
  CutSize best = CutSize::infinite();
  const std::uint32_t full = 1u << (n - 1);
  std::vector<char> in(static_cast<size_t>(n), 0);
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    in[0] = 1;
    for (int i = 1; i < n; ++i) in[i] = (mask >> (i - 1)) & 1u;
    int size = 0;
    for (const Edge& e : g.edges()) size += in[e.u] != in[e.v] ? 1 : 0;
    if (best.is_finite() && size >= best.value()) continue;
    if (count_heavy_components(g, in, r) >= 2) best = CutSize(size);
  }
  return best;
}

namespace {

// Minimum vertex set separating {a,b} from {c,d}; the four anchors are uncuttable.
int min_vertex_separator(const SimpleGraph& g, const Edge& e, const Edge& f, int limit, std::vector<VertexId>* witness) {
  const int n = g.num_vertices();
  FlowNetwork net(2 * n + 2);
  const int s = 2 * n;
  const int t = 2 * n + 1;
  auto anchored = [&](VertexId v) { return e.has(v) || f.has(v); };
  for (VertexId v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, anchored(v) ? FlowNetwork::kInfinite : 1);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : g.neighbours(u)) net.add_arc(2 * u + 1, 2 * v, FlowNetwork::kInfinite);
  }
  net.add_arc(s, 2 * e.u, FlowNetwork::kInfinite);
  net.add_arc(s, 2 * e.v, FlowNetwork::kInfinite);
  net.add_arc(2 * f.u + 1, t, FlowNetwork::kInfinite);
  net.add_arc(2 * f.v + 1, t, FlowNetwork::kInfinite);
  const int flow = net.max_flow(s, t, limit);
  if (flow < limit && witness != nullptr) {
    auto reach = net.residual_reachable(s);
    witness->clear();
    for (VertexId v = 0; v < n; ++v) {
      if (reach[2 * v] && !reach[2 * v + 1]) witness->push_back(v);
    }
  }
  return flow;
}

}  // namespace

std::optional<std::vector<VertexId>> min_essential_vertex_cut(const SimpleGraph& g) {
  const auto es = g.edges();
  std::optional<std::vector<VertexId>> best;
  for (size_t i = 0; i < es.size(); ++i) {
    for (size_t j = i + 1; j < es.size(); ++j) {
      const Edge& e = es[i];
      const Edge& f = es[j];
      if (e.has(f.u) || e.has(f.v)) continue;
      if (g.adjacent(e.u, f.u) || g.adjacent(e.u, f.v) || g.adjacent(e.v, f.u) || g.adjacent(e.v, f.v)) continue;
      const int limit = best ? static_cast<int>(best->size()) : FlowNetwork::kInfinite;
      std::vector<VertexId> witness;
      const int flow = min_vertex_separator(g, e, f, limit, &witness);
      if (flow < limit) {
        best = witness;
        if (best->empty()) return best;
      }
    }
  }
  return best;
}

CutSize essential_vertex_connectivity(const SimpleGraph& g) {
  auto cut = min_essential_vertex_cut(g);
  return cut ? CutSize(static_cast<int>(cut->size())) : CutSize::infinite();
}

CutSize essential_vertex_connectivity_exhaustive(const SimpleGraph& g) {
  const int n = g.num_vertices();
  if (n > 18) throw GraphError("exhaustive essential connectivity limited to 18 vertices");
  // Masks ordered by popcount so the first hit is minimum.
  std::vector<std::uint32_t> masks(1u << n);
  for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  std::vector<int> comp(static_cast<size_t>(n));
  for (std::uint32_t removed : masks) {
    std::fill(comp.begin(), comp.end(), -1);
    int nontrivial = 0;
    for (VertexId s = 0; s < n; ++s) {
      if ((removed >> s) & 1u || comp[s] >= 0) continue;
      int size = 0;
      std::vector<VertexId> stack{s};
      comp[s] = s;
      while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        ++size;
        for (VertexId w : g.neighbours(v)) {
          if ((removed >> w) & 1u || comp[w] >= 0) continue;
          comp[w] = s;
          stack.push_back(w);
        }
      }
      if (size > 1) ++nontrivial;
    }
    if (nontrivial >= 2) return CutSize(__builtin_popcount(removed));
  }
  return CutSize::infinite();
}

bool is_essentially_k_connected(const SimpleGraph& g, int k) {
  if (g.num_vertices() <= k) return false;
  return essential_vertex_connectivity(g).at_least(k);
}

int vertex_connectivity(const SimpleGraph& g) {
  const int n = g.num_vertices();
  if (n <= 1) return 0;
  int best = n - 1;
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      FlowNetwork net(2 * n);
      for (VertexId v = 0; v < n; ++v) {
        net.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? FlowNetwork::kInfinite : 1);
        for (VertexId w : g.neighbours(v)) net.add_arc(2 * v + 1, 2 * w, FlowNetwork::kInfinite);
      }
      best = std::min(best, net.max_flow(2 * s + 1, 2 * t, best));
      if (best == 0) return 0;
    }
  }
  return best;
}

SimpleGraph line_graph(const Multigraph& g) {
  if (g.num_edges() == 0) throw GraphError("no edges");
  SimpleGraph l(g.num_edges());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incident(v);
    for (size_t i = 0; i < inc.size(); ++i) {
      for (size_t j = i + 1; j < inc.size(); ++j) l.add_edge(inc[i], inc[j]);
    }
  }
  return l;
}

Obs2EssCheck evaluate_obs_2ess(const Multigraph& g, int k) {
  Obs2EssCheck out;
  out.vertex_side = is_essentially_k_connected(line_graph(g), k);
  out.edge_side = r_essential_edge_connectivity(g, 2).at_least(k) && g.num_edges() > k;
  return out;
}

bool check_obs_2ess(const Multigraph& g, int k) { return evaluate_obs_2ess(g, k).agree(); }

std::optional<std::vector<VertexId>> find_claw(const SimpleGraph& g) {
  for (VertexId c = 0; c < g.num_vertices(); ++c) {
    const auto& nb = g.neighbours(c);
    for (size_t i = 0; i < nb.size(); ++i) {
      for (size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (size_t k = j + 1; k < nb.size(); ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return std::vector<VertexId>{c, nb[i], nb[j], nb[k]};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_claw_free(const SimpleGraph& g) { return !find_claw(g).has_value(); }

SimpleGraph local_completion(const SimpleGraph& g, VertexId x) {
  if (!g.has_vertex(x)) throw GraphError("vertex " + std::to_string(x) + " is not in the graph");
  SimpleGraph out = g;
  const auto nb = g.neighbours(x);
  for (size_t i = 0; i < nb.size(); ++i) {
    for (size_t j = i + 1; j < nb.size(); ++j) out.add_edge(nb[i], nb[j]);
  }
  return out;
}

bool check_lemma_ess(const SimpleGraph& g, std::span<const VertexId> completion_sequence, int k) {
  if (!is_connected(g.to_multigraph())) throw GraphError("premise failed: graph is not connected");
  if (!is_claw_free(g)) throw GraphError("premise failed: graph is not claw-free");
  if (!is_essentially_k_connected(g, k)) throw GraphError("premise failed: graph is not essentially k-connected");
  SimpleGraph current = g;
  bool ok = true;
  for (VertexId x : completion_sequence) {
    current = local_completion(current, x);
    ok = ok && is_essentially_k_connected(current, k);
  }
  return ok;
}

LineProfile line_profile(const Multigraph& g) {
  LineProfile p;
  p.edges = g.num_edges();
  p.edge_connectivity = r_essential_edge_connectivity(g, 0);
  p.essential = r_essential_edge_connectivity(g, 1);
  p.two_essential = r_essential_edge_connectivity(g, 2);
  if (p.edges == 0) return p;
  // L(G) is k-connected iff G is essentially k-edge-connected and |E(G)| > k.
  p.line_connectivity = p.essential.is_finite() ? std::min(p.essential.value(), p.edges - 1) : p.edges - 1;
  p.line_essential = p.two_essential.is_finite() ? std::min(p.two_essential.value(), p.edges - 1) : p.edges - 1;
  p.qualifying = p.line_connectivity >= 3 && p.line_essential >= 9;
  return p;
}

}  // namespace lhc
