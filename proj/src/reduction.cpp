#include "lhc/reduction.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lhc/connectivity.hpp"

namespace lhc {

bool CoreResult::is_protected(VertexId c) const {
  return std::binary_search(protected_vertices.begin(), protected_vertices.end(), c);
}

bool HyperReduction::is_temporary(VertexId c) const { return std::binary_search(w.begin(), w.end(), c); }

namespace {

std::string edges_text(const Multigraph& g, std::span<const EdgeId> es) {
  std::ostringstream s;
  s << '{';
  for (size_t i = 0; i < es.size(); ++i) s << (i ? ", " : "") << g.edge(es[i]).u << '-' << g.edge(es[i]).v;
  s << '}';
  return s.str();
}

struct WorkEdge {
  VertexId a, b;
  CorePath path;
  bool alive = true;
};

}  // namespace

CoreResult compute_core(const Multigraph& g, CorePolicy policy) {
  CoreResult out;
  const int n = g.num_vertices();
  if (g.num_edges() == 0) throw ReductionError("graph has no edges");
  if (!is_connected(g)) {
    out.hypothesis_ok = false;
    if (policy == CorePolicy::Strict) throw ReductionError("graph is disconnected (cut of size 0)");
  } else if (auto cut = min_r_essential_cut(g, 1); cut && cut->size() < 3) {
    out.hypothesis_ok = false;
    if (policy == CorePolicy::Strict) {
      throw ReductionError("graph is not essentially 3-edge-connected: essential cut " + edges_text(g, cut->edges));
    }
  }
  if (!out.hypothesis_ok) out.log.push_back("hypothesis check failed, continuing leniently");

  std::vector<char> alive(static_cast<size_t>(n), 1);
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == 1) {
      out.leaves.push_back(v);
      alive[v] = 0;
    }
  }
  std::vector<WorkEdge> work;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (!alive[ed.u] || !alive[ed.v]) continue;
    work.push_back({ed.u, ed.v, {{e}, {ed.u, ed.v}}, true});
  }
  // Edge slots are never reused, so slot order equals creation order.
  std::vector<int> slot_of_graph_edge;
  auto incident = [&](VertexId v) {
    std::vector<int> out_slots;
    for (size_t i = 0; i < work.size(); ++i) {
      if (work[i].alive && (work[i].a == v || work[i].b == v)) out_slots.push_back(static_cast<int>(i));
    }
    return out_slots;
  };
  while (true) {
    VertexId target = -1;
    std::vector<int> inc;
    for (VertexId v = 0; v < n && target < 0; ++v) {
      if (!alive[v]) continue;
      inc = incident(v);
      if (inc.size() == 2) target = v;
    }
    if (target < 0) break;
    WorkEdge& f1 = work[inc[0]];
    WorkEdge& f2 = work[inc[1]];
    const VertexId x = f1.a == target ? f1.b : f1.a;
    const VertexId y = f2.a == target ? f2.b : f2.a;
    alive[target] = 0;
    if (x == y) {
      // Contracting f1 turns f2 into a loop at x, which is discarded.
      for (EdgeId e : f1.path.edges) out.discarded_loops.push_back(e);
      for (EdgeId e : f2.path.edges) out.discarded_loops.push_back(e);
      f1.alive = f2.alive = false;
      out.log.push_back("suppressed vertex " + std::to_string(target) + ", loop discarded at " + std::to_string(x));
      continue;
    }
    CorePath p1 = f1.path;
    if (p1.vertices.back() != target) {
      std::reverse(p1.edges.begin(), p1.edges.end());
      std::reverse(p1.vertices.begin(), p1.vertices.end());
    }
    CorePath p2 = f2.path;
    if (p2.vertices.front() != target) {
      std::reverse(p2.edges.begin(), p2.edges.end());
      std::reverse(p2.vertices.begin(), p2.vertices.end());
    }
    p1.edges.insert(p1.edges.end(), p2.edges.begin(), p2.edges.end());
    p1.vertices.insert(p1.vertices.end(), p2.vertices.begin() + 1, p2.vertices.end());
    f2.a = x;
    f2.b = y;
    f2.path = std::move(p1);
    f1.alive = false;
    out.log.push_back("suppressed vertex " + std::to_string(target));
  }

  if (std::none_of(alive.begin(), alive.end(), [](char c) { return c != 0; })) {
    // K2: both endvertices are leaves; keep the lower one as the trivial core.
    VertexId keep = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (g.degree(v) > 0) {
        keep = v;
        break;
      }
    }
    alive[keep] = 1;
  }
  out.graph_to_core.assign(static_cast<size_t>(n), -1);
  for (VertexId v = 0; v < n; ++v) {
    if (alive[v]) {
      out.graph_to_core[v] = static_cast<VertexId>(out.core_to_graph.size());
      out.core_to_graph.push_back(v);
    } else {
      out.transient.push_back(v);
    }
  }
  out.core = Multigraph(static_cast<int>(out.core_to_graph.size()));
  out.graph_edge_to_core.assign(static_cast<size_t>(g.num_edges()), -1);
  for (const WorkEdge& w : work) {
    if (!w.alive) continue;
    const EdgeId id = out.core.add_edge(out.graph_to_core[w.a], out.graph_to_core[w.b]);
    out.paths.push_back(w.path);
    for (EdgeId e : w.path.edges) out.graph_edge_to_core[e] = id;
  }
  out.trivial = out.core.num_vertices() == 1;
  for (VertexId c = 0; c < out.core.num_vertices(); ++c) {
    if (out.core.degree(c) != 3) continue;
    for (EdgeId e : g.incident(out.core_to_graph[c])) {
      if (!alive[g.edge(e).other(out.core_to_graph[c])]) {
        out.protected_vertices.push_back(c);
        break;
      }
    }
  }
  return out;
}

std::vector<VertexId> xcore(const Multigraph& g, const CoreResult& core, std::span<const VertexId> x) {
  membership(core.core.num_vertices(), x);  // validates x
  std::vector<char> in(static_cast<size_t>(g.num_vertices()), 0);
  for (VertexId c : x) in[core.core_to_graph[c]] = 1;
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) {
      out.push_back(v);
      continue;
    }
    if (core.graph_to_core[v] >= 0) continue;
    bool all = true;
    for (EdgeId e : g.incident(v)) all = all && in[g.edge(e).other(v)];
    if (all && g.degree(v) > 0) out.push_back(v);
  }
  return out;
}

bool check_obs_cuts(const Multigraph& g, const CoreResult& core, std::span<const VertexId> x) {
  const auto plus = xcore(g, core, x);
  if (boundary(core.core, x).size() != boundary(g, plus).size()) return false;
  for (int r = 0; r <= 2; ++r) {
    if (is_r_essential_cut(core.core, x, r) && !is_r_essential_cut(g, plus, r)) return false;
  }
  return true;
}

CoreProperties check_core_properties(const CoreResult& core) {
  CoreProperties p;
  if (core.trivial) return p;
  p.three_edge_connected = r_essential_edge_connectivity(core.core, 0).at_least(3);
  p.essentially_four = r_essential_edge_connectivity(core.core, 1).at_least(4);
  p.two_essentially_nine = r_essential_edge_connectivity(core.core, 2).at_least(9);
  return p;
}

std::vector<VertexId> select_w(const CoreResult& core, std::optional<unsigned> seed) {
  std::vector<VertexId> order;
  for (VertexId c = 0; c < core.core.num_vertices(); ++c) {
    if (core.core.degree(c) == 3 && !core.is_protected(c)) order.push_back(c);
  }
  if (seed) {
    std::mt19937 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::vector<char> chosen(static_cast<size_t>(core.core.num_vertices()), 0);
  std::vector<VertexId> w;
  for (VertexId c : order) {
    bool free = true;
    for (VertexId nb : core.core.neighbours(c)) free = free && !chosen[nb];
    if (free) {
      chosen[c] = 1;
      w.push_back(c);
    }
  }
  std::sort(w.begin(), w.end());
  return w;
}

HyperReduction build_h0(const CoreResult& core, std::span<const VertexId> w) {
  HyperReduction red;
  red.w.assign(w.begin(), w.end());
  std::sort(red.w.begin(), red.w.end());
  const int nc = core.core.num_vertices();
  red.core_to_h0.assign(static_cast<size_t>(nc), -1);
  for (VertexId c = 0; c < nc; ++c) {
    if (red.is_temporary(c)) continue;
    red.core_to_h0[c] = red.h0.add_vertex(std::to_string(core.core_to_graph[c]));
    red.permanent.push_back(c);
  }
  for (EdgeId e = 0; e < core.core.num_edges(); ++e) {
    const Edge& ed = core.core.edge(e);
    if (red.is_temporary(ed.u) || red.is_temporary(ed.v)) continue;
    std::vector<VertexId> vs{red.core_to_h0[ed.u], red.core_to_h0[ed.v]};
    red.h0.add_hyperedge_with_id(e, vs);
  }
  for (VertexId c : red.w) {
    std::vector<VertexId> nbs;
    for (VertexId nb : core.core.neighbours(c)) {
      if (red.core_to_h0[nb] < 0) throw ReductionError("temporary vertices must be independent");
      nbs.push_back(red.core_to_h0[nb]);
    }
    if (nbs.size() < 2) {
      red.log.push_back("h(w) omitted for w=" + std::to_string(core.core_to_graph[c]) + ": fewer than two neighbours");
      continue;
    }
    const HyperedgeId id = core.core.num_edges() + c;
    red.h0.add_hyperedge_with_id(id, nbs);
    red.h_of[c] = id;
  }
  return red;
}

std::vector<VertexId> xhyper(const CoreResult& core, const HyperReduction& red, std::span<const VertexId> y) {
  membership(red.h0.num_vertices(), y);  // validates y
  std::vector<char> in_core(static_cast<size_t>(core.core.num_vertices()), 0);
  for (VertexId v : y) in_core[red.permanent[v]] = 1;
  for (VertexId c : red.w) {
    int count = 0;
    for (EdgeId e : core.core.incident(c)) count += in_core[core.core.edge(e).other(c)];
    if (count >= 2) in_core[c] = 2;
  }
  std::vector<VertexId> out;
  for (VertexId c = 0; c < core.core.num_vertices(); ++c) {
    if (in_core[c]) out.push_back(c);
  }
  return out;
}

bool check_xhyper_degree(const CoreResult& core, const HyperReduction& red, std::span<const VertexId> y) {
  return degree_of_set(red.h0, y) == boundary(core.core, xhyper(core, red, y)).size();
}

std::optional<EdgeId> k1_map(const CoreResult& core, EdgeId e) {
  const EdgeId c = core.graph_edge_to_core.at(e);
  if (c < 0) return std::nullopt;
  return c;
}

std::optional<HyperedgeId> k2_map(const CoreResult& core, const HyperReduction& red, EdgeId f) {
  const Edge& ed = core.core.edge(f);
  for (VertexId end : {ed.u, ed.v}) {
    if (red.is_temporary(end)) {
      auto it = red.h_of.find(end);
      if (it == red.h_of.end()) return std::nullopt;
      return it->second;
    }
  }
  return f;
}

std::optional<HyperedgeId> k_map(const Multigraph& g, const CoreResult& core, const HyperReduction& red, EdgeId e) {
  if (!g.has_edge(e)) throw GraphError("edge " + std::to_string(e) + " is not in the graph");
  auto f = k1_map(core, e);
  if (!f) return std::nullopt;
  return k2_map(core, red, *f);
}

bool check_lemma_permanent(const Multigraph& g, const CoreResult& core, const HyperReduction& red) {
  auto permanent = [&](VertexId v) {
    const VertexId c = core.graph_to_core[v];
    return c >= 0 && !red.is_temporary(c);
  };
  for (const Edge& e : g.edges()) {
    if (!permanent(e.u) && !permanent(e.v)) return false;
  }
  return true;
}

std::vector<VertexId> anchor_candidates(const Multigraph& g, const CoreResult& core, const HyperReduction& red,
                                        EdgeId e) {
  std::vector<VertexId> c;
  const auto k = k_map(g, core, red, e);
  if (!k) return c;
  const Edge& ed = g.edge(e);
  for (VertexId v : {std::min(ed.u, ed.v), std::max(ed.u, ed.v)}) {
    const VertexId cv = core.graph_to_core[v];
    if (cv < 0 || red.core_to_h0[cv] < 0) continue;
    if (red.h0.hyperedge(*k).contains(red.core_to_h0[cv])) c.push_back(red.core_to_h0[cv]);
  }
  return c;
}

AnchoredHypergraph build_he(const Multigraph& g, const CoreResult& core, const HyperReduction& red, EdgeId e1, EdgeId e2) {
  if (e1 == e2) throw ReductionError("e1 and e2 must be distinct");
  AnchoredHypergraph out;
  out.e1 = e1;
  out.e2 = e2;
  auto k1 = k_map(g, core, red, e1);
  auto k2 = k_map(g, core, red, e2);
  if (!k1 || !k2) throw ReductionError("edge collapses under reduction");
  out.k1 = *k1;
  out.k2 = *k2;
  const auto c1 = anchor_candidates(g, core, red, e1);
  const auto c2 = anchor_candidates(g, core, red, e2);
  if (c1.empty() || c2.empty()) throw ReductionError("no permanent endvertex lies in k(e)");
  out.a1 = c1.front();
  out.a2 = c2.front();
  bool distinct = false;
  for (VertexId a : c1) {
    for (VertexId b : c2) {
      if (a != b && !distinct) {
        out.a1 = a;
        out.a2 = b;
        distinct = true;
      }
    }
  }
  out.he = detach(red.h0, out.k1, out.a1);
  const Hyperedge* second = out.he.find(out.k2);
  if (second != nullptr && second->contains(out.a2)) {
    out.he = detach(out.he, out.k2, out.a2);
  } else {
    out.second_detach_skipped = true;
    out.log.push_back("second detachment skipped: k(e2) no longer contains a2");
  }
  return out;
}

Reduction reduce(const Multigraph& g, CorePolicy policy, std::optional<unsigned> seed) {
  Reduction r;
  r.core = compute_core(g, policy);
  const auto w = r.core.trivial ? std::vector<VertexId>{} : select_w(r.core, seed);
  r.hyper = build_h0(r.core, w);
  return r;
}

}  // namespace lhc
