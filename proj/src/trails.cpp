#include "lhc/trails.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "lhc/connectivity.hpp"

namespace lhc {

bool is_valid_trail(const Multigraph& g, const Trail& t) {
  if (t.vertices.size() != t.edges.size() + 1) return false;
  for (VertexId v : t.vertices)
    if (!g.has_vertex(v)) return false;
  std::vector<char> seen(g.num_edges(), 0);
  for (size_t i = 0; i < t.edges.size(); ++i) {
    EdgeId e = t.edges[i];
    if (!g.has_edge(e) || seen[e]) return false;
    seen[e] = 1;
    const Edge& ed = g.edge(e);
    if (!ed.has(t.vertices[i]) || ed.other(t.vertices[i]) != t.vertices[i + 1]) return false;
  }
  return true;
}

namespace {

std::vector<char> interior(const Trail& t, int n) {
  std::vector<char> in(n, 0);
  for (size_t i = 1; i + 1 < t.vertices.size(); ++i) in[t.vertices[i]] = 1;
  return in;
}

}  // namespace

bool is_internally_dominating(const Trail& t, const Multigraph& g) {
  auto in = interior(t, g.num_vertices());
  for (const Edge& e : g.edges())
    if (!in[e.u] && !in[e.v]) return false;
  return true;
}

bool is_internally_spanning(const Trail& t, const Multigraph& g) {
  auto in = interior(t, g.num_vertices());
  return std::all_of(in.begin(), in.end(), [](char c) { return c != 0; });
}

namespace {

class TrailSearch {
 public:
  TrailSearch(const Multigraph& g, VertexId a, VertexId b, const TrailConstraints& c)
      : g_(g), a_(a), b_(b), c_(c), n_(g.num_vertices()), used_deg_(n_, 0), must_(n_, 0), dead_(n_) {
    for (VertexId v : c.must_span) must_.at(v) = 1;
    trail_.vertices.push_back(a);
  }

  std::optional<Trail> run() {
    if (dfs(a_)) return trail_;
    return std::nullopt;
  }

 private:
  bool internal(VertexId v, VertexId cur) const {
    return used_deg_[v] - (v == a_ ? 1 : 0) - (v == cur ? 1 : 0) > 0;
  }
  bool visited(VertexId v) const { return v == a_ || used_deg_[v] > 0; }
  bool is_used(EdgeId e) const { return (used_ >> e) & 1u; }

  bool done(VertexId cur) const {
    if (cur != b_) return false;
    if (c_.first_edge && trail_.edges.empty()) return false;
    if (c_.last_edge && (trail_.edges.empty() || trail_.edges.back() != *c_.last_edge)) return false;
    for (VertexId v = 0; v < n_; ++v) {
      if (must_[v] && !visited(v)) return false;
      if (c_.internally_spanning && !internal(v, cur)) return false;
    }
    if (c_.internally_dominating)
      for (const Edge& e : g_.edges())
        if (!internal(e.u, cur) && !internal(e.v, cur)) return false;
    return true;
  }

  bool feasible(VertexId cur) const {
    std::vector<char> reach(n_, 0);
    std::vector<VertexId> stack{cur};
    reach[cur] = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : g_.incident(x)) {
        if (is_used(e)) continue;
        VertexId y = g_.edge(e).other(x);
        if (!reach[y]) {
          reach[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (!reach[b_]) return false;
    if (c_.last_edge) {
      const Edge& l = g_.edge(*c_.last_edge);
      if (!reach[l.u] && !reach[l.v]) return false;
    }
    for (VertexId v = 0; v < n_; ++v) {
      if (must_[v] && !visited(v) && !reach[v]) return false;
      if (c_.internally_spanning && !internal(v, cur) && !reach[v]) return false;
    }
    if (c_.internally_dominating)
      for (const Edge& e : g_.edges())
        if (!internal(e.u, cur) && !internal(e.v, cur) && !reach[e.u] && !reach[e.v]) return false;
    return true;
  }

  bool dfs(VertexId cur) {
    if (++nodes_ > c_.node_budget) throw GraphError("trail search budget exhausted");
    if (done(cur)) return true;
    if (c_.last_edge && is_used(*c_.last_edge)) return false;
    if (dead_[cur].contains(used_)) return false;
    if (feasible(cur)) {
      for (EdgeId e : g_.incident(cur)) {
        if (is_used(e)) continue;
        if (trail_.edges.empty() && c_.first_edge && e != *c_.first_edge) continue;
        VertexId next = g_.edge(e).other(cur);
        if (c_.last_edge && e == *c_.last_edge && next != b_) continue;
        used_ |= std::uint64_t{1} << e;
        ++used_deg_[cur];
        ++used_deg_[next];
        trail_.edges.push_back(e);
        trail_.vertices.push_back(next);
        if (dfs(next)) return true;
        trail_.edges.pop_back();
        trail_.vertices.pop_back();
        --used_deg_[cur];
        --used_deg_[next];
        used_ &= ~(std::uint64_t{1} << e);
      }
    }
    dead_[cur].insert(used_);
    return false;
  }

  const Multigraph& g_;
  VertexId a_, b_;
  const TrailConstraints& c_;
  int n_;
  std::uint64_t used_ = 0;
  std::vector<int> used_deg_;
  std::vector<char> must_;
  std::vector<std::unordered_set<std::uint64_t>> dead_;
  Trail trail_;
  long long nodes_ = 0;
};

}  // namespace

std::optional<Trail> find_trail(const Multigraph& g, VertexId a, VertexId b, const TrailConstraints& c) {
  if (!g.has_vertex(a) || !g.has_vertex(b)) throw GraphError("trail endpoint out of range");
  if (g.num_edges() > 64) throw GraphError("trail search supports at most 64 edges");
  if (g.num_edges() > c.max_edges && !c.best_effort)
    throw GraphError("trail search regime exceeded: " + std::to_string(g.num_edges()) + " edges > " +
                     std::to_string(c.max_edges));
  if (c.first_edge && !g.edge(*c.first_edge).has(a)) return std::nullopt;
  if (c.last_edge && !g.edge(*c.last_edge).has(b)) return std::nullopt;
  if (c.first_edge && c.last_edge && *c.first_edge == *c.last_edge) {
    const Edge& e = g.edge(*c.first_edge);
    if (e.other(a) != b) return std::nullopt;
  }
  return TrailSearch(g, a, b, c).run();
}

std::optional<Trail> dominating_trail(const Multigraph& g, EdgeId e1, EdgeId e2, int max_edges) {
  if (!g.has_edge(e1) || !g.has_edge(e2)) throw GraphError("edge out of range");
  if (e1 == e2) throw GraphError("dominating trail needs two distinct edges");
  TrailConstraints c;
  c.first_edge = e1;
  c.last_edge = e2;
  c.internally_dominating = true;
  c.max_edges = max_edges;
  const Edge& f1 = g.edge(e1);
  const Edge& f2 = g.edge(e2);
  for (VertexId a : {f1.u, f1.v})
    for (VertexId b : {f2.u, f2.v})
      if (auto t = find_trail(g, a, b, c)) return t;
  return std::nullopt;
}

namespace {

std::vector<std::uint32_t> adjacency_masks(const SimpleGraph& g) {
  std::vector<std::uint32_t> adj(g.num_vertices(), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (VertexId w : g.neighbours(v)) adj[v] |= std::uint32_t{1} << w;
  return adj;
}

// dp[mask] = set of possible last vertices of a path covering exactly mask.
void path_dp(const std::vector<std::uint32_t>& adj, std::vector<std::uint32_t>& dp, std::uint32_t start_mask) {
  int n = static_cast<int>(adj.size());
  std::fill(dp.begin(), dp.end(), 0);
  for (int v = 0; v < n; ++v)
    if ((start_mask >> v) & 1u) dp[std::uint32_t{1} << v] = std::uint32_t{1} << v;
  std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    std::uint32_t ends = dp[mask];
    if (!ends) continue;
    for (int w = 0; w < n; ++w) {
      std::uint32_t bit = std::uint32_t{1} << w;
      if ((mask & bit) || !(ends & adj[w])) continue;
      dp[mask | bit] |= bit;
    }
    if (mask == full) break;
  }
}

}  // namespace

bool ham_path_exists(const SimpleGraph& g, std::optional<VertexId> a, std::optional<VertexId> b) {
  int n = g.num_vertices();
  if (n > 24) throw GraphError("Hamilton path DP supports at most 24 vertices");
  if ((a && !g.has_vertex(*a)) || (b && !g.has_vertex(*b))) throw GraphError("vertex out of range");
  if (n == 0) return false;
  if (n == 1) return true;
  if (a && b && *a == *b) return false;
  auto adj = adjacency_masks(g);
  std::vector<std::uint32_t> dp(std::size_t{1} << n);
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::uint32_t starts = a ? (std::uint32_t{1} << *a) : full;
  path_dp(adj, dp, starts);
  std::uint32_t ends = dp[full];
  return b ? ((ends >> *b) & 1u) != 0 : ends != 0;
}

bool ham_connected(const SimpleGraph& g) {
  int n = g.num_vertices();
  if (n > 24) throw GraphError("Hamilton path DP supports at most 24 vertices");
  if (n <= 1) return n == 1;
  auto adj = adjacency_masks(g);
  std::vector<std::uint32_t> dp(std::size_t{1} << n);
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (VertexId a = 0; a + 1 < n; ++a) {
    path_dp(adj, dp, std::uint32_t{1} << a);
    std::uint32_t need = full & ~((std::uint32_t{2} << a) - 1);
    if ((dp[full] & need) != need) return false;
  }
  return true;
}

PreimageCheck crosscheck_preimage(const Multigraph& g) {
  if (g.num_edges() < 3) throw GraphError("preimage check needs at least 3 edges");
  PreimageCheck r;
  r.line_ham_connected = ham_connected(line_graph(g));
  r.all_pairs_have_trails = true;
  for (EdgeId e1 = 0; e1 < g.num_edges() && r.all_pairs_have_trails; ++e1)
    for (EdgeId e2 = e1 + 1; e2 < g.num_edges(); ++e2)
      if (!dominating_trail(g, e1, e2, 64)) {
        r.all_pairs_have_trails = false;
        r.failing_pair = {e1, e2};
        break;
      }
  return r;
}

namespace {

// Edges on the forest path between u and v, or nullopt if they are not joined.
std::optional<std::vector<EdgeId>> forest_path(const Multigraph& g, const std::vector<int>& owner, int forest,
                                               VertexId u, VertexId v) {
  int n = g.num_vertices();
  std::vector<EdgeId> via(n, -1);
  std::vector<char> seen(n, 0);
  std::queue<VertexId> q;
  q.push(u);
  seen[u] = 1;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    if (x == v) break;
    for (EdgeId e : g.incident(x)) {
      if (owner[e] != forest) continue;
      VertexId y = g.edge(e).other(x);
      if (!seen[y]) {
        seen[y] = 1;
        via[y] = e;
        q.push(y);
      }
    }
  }
  if (!seen[v]) return std::nullopt;
  std::vector<EdgeId> path;
  for (VertexId x = v; x != u; x = g.edge(via[x]).other(x)) path.push_back(via[x]);
  return path;
}

}  // namespace

bool is_spanning_tree(const Multigraph& g, const std::vector<EdgeId>& edges) {
  int n = g.num_vertices();
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) return false;
    int a = find(g.edge(e).u), b = find(g.edge(e).v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

std::optional<SpanningTreePair> two_disjoint_spanning_trees(const Multigraph& g) {
  int n = g.num_vertices(), m = g.num_edges();
  if (n == 0) throw GraphError("empty graph");
  std::vector<int> owner(m, -1);
  for (EdgeId s = 0; s < m; ++s) {
    std::vector<std::pair<EdgeId, int>> parent(m, {-1, -1});
    std::vector<char> seen(m, 0);
    std::queue<EdgeId> q;
    q.push(s);
    seen[s] = 1;
    bool augmented = false;
    while (!q.empty() && !augmented) {
      EdgeId x = q.front();
      q.pop();
      for (int i = 0; i < 2 && !augmented; ++i) {
        if (owner[x] == i) continue;
        auto cycle = forest_path(g, owner, i, g.edge(x).u, g.edge(x).v);
        if (!cycle) {
          EdgeId cur = x;
          int target = i;
          while (true) {
            owner[cur] = target;
            if (cur == s) break;
            auto [p, j] = parent[cur];
            cur = p;
            target = j;
          }
          augmented = true;
          break;
        }
        for (EdgeId y : *cycle) {
          if (seen[y]) continue;
          seen[y] = 1;
          parent[y] = {x, i};
          q.push(y);
        }
      }
    }
  }
  SpanningTreePair trees;
  for (EdgeId e = 0; e < m; ++e) {
    if (owner[e] == 0) trees.first.push_back(e);
    if (owner[e] == 1) trees.second.push_back(e);
  }
  if (!is_spanning_tree(g, trees.first) || !is_spanning_tree(g, trees.second)) return std::nullopt;
  return trees;
}

NashWilliamsResult nash_williams_check(const Multigraph& g) {
  int n = g.num_vertices();
  if (n == 0 || n > 12) throw GraphError("Nash-Williams check supports 1..12 vertices");
  std::vector<int> label(n, 0), maxp(n, 0);
  NashWilliamsResult best;
  bool first = true;
  while (true) {
    int classes = *std::max_element(label.begin(), label.end()) + 1;
    int crossing = 0;
    for (const Edge& e : g.edges())
      if (label[e.u] != label[e.v]) ++crossing;
    int slack = crossing - 2 * (classes - 1);
    if (first || slack < best.slack) {
      best.slack = slack;
      best.worst = Partition::from_labels(label);
      first = false;
    }
    int i = n - 1;
    while (i > 0 && label[i] == maxp[i] + 1) --i;
    if (i == 0) break;
    ++label[i];
    for (int j = i + 1; j < n; ++j) {
      label[j] = 0;
      maxp[j] = std::max(maxp[j - 1], label[j - 1]);
    }
  }
  best.verdict = best.slack >= 0;
  return best;
}

bool lemma_small_bound(int p) { return (3 * p + 1) / 2 >= 2 * (p - 1); }

LemmaSmallResult check_lemma_small(const Multigraph& core) {
  LemmaSmallResult r;
  int n = core.num_vertices();
  r.applicable = n >= 1 && n <= 5 && r_essential_edge_connectivity(core, 0).at_least(3);
  if (!r.applicable) return r;
  r.bound_holds = true;
  for (int p = 1; p <= n; ++p) r.bound_holds = r.bound_holds && lemma_small_bound(p);
  r.trees = two_disjoint_spanning_trees(core);
  return r;
}

namespace {

bool same_hypergraph(const Hypergraph3& a, const Hypergraph3& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_hyperedges() != b.num_hyperedges()) return false;
  for (size_t i = 0; i < a.hyperedges().size(); ++i) {
    const Hyperedge& x = a.hyperedges()[i];
    const Hyperedge& y = b.hyperedges()[i];
    if (x.id != y.id || x.vertices != y.vertices) return false;
  }
  return true;
}

}  // namespace

Trail qt_join(const Hypergraph3& h, VertexId b1, VertexId b2, const Quasigraph& witness, int max_edges) {
  if (!same_hypergraph(h, witness.host())) throw GraphError("qt_join precondition failed: witness host differs");
  std::vector<VertexId> all(h.num_vertices());
  std::iota(all.begin(), all.end(), 0);
  if (!is_acyclic(witness)) throw GraphError("qt_join precondition failed: quasigraph not acyclic");
  if (!connected_on(witness, all)) throw GraphError("qt_join precondition failed: not connected");
  if (!anticonnected_on(witness, all, EmptyImage::Contained, 64))
    throw GraphError("qt_join precondition failed: not anticonnected");
  IncidenceGraph ig = incidence_graph(h);
  TrailConstraints c;
  c.must_span = all;
  c.max_edges = max_edges;
  auto t = find_trail(ig.graph, b1, b2, c);
  if (!t) throw SearchExhausted("qt_join: no spanning trail in G(H); proposition falsified at this scale");
  return *t;
}

namespace {

class Lifter {
 public:
  explicit Lifter(const CoreResult& core) : core_(core), used_core_(core.core.num_edges(), 0) {}

  void start(VertexId gv) { out_.vertices = {gv}; }

  // Appends the G-path of core edge f, walked from core vertex s.
  void walk_core_edge(EdgeId f, VertexId s) {
    if (used_core_.at(f)) throw GraphError("lift reuses core edge " + std::to_string(f));
    used_core_[f] = 1;
    const CorePath& p = core_.paths.at(f);
    VertexId from = core_.core_to_graph.at(s);
    bool forward = p.vertices.front() == from;
    if (!forward && p.vertices.back() != from) throw GraphError("lift: core path does not start at current vertex");
    if (out_.vertices.back() != from) throw GraphError("lift: discontinuous walk");
    size_t k = p.edges.size();
    for (size_t i = 0; i < k; ++i) {
      out_.edges.push_back(forward ? p.edges[i] : p.edges[k - 1 - i]);
      out_.vertices.push_back(forward ? p.vertices[i + 1] : p.vertices[k - 1 - i]);
    }
  }

  EdgeId core_edge_between(VertexId x, VertexId w) const {
    for (EdgeId f : core_.core.incident(x))
      if (!used_core_[f] && core_.core.edge(f).other(x) == w) return f;
    throw GraphError("lift: no unused core edge between core vertices");
  }

  Trail& result() { return out_; }

 private:
  const CoreResult& core_;
  std::vector<char> used_core_;
  Trail out_;
};

}  // namespace

Trail lift_trail(const Trail& te, const Multigraph& g, const CoreResult& core, const HyperReduction& red,
                 const AnchoredHypergraph& anchored) {
  const Hypergraph3& he = anchored.he;
  IncidenceGraph ig = incidence_graph(he);
  if (!is_valid_trail(ig.graph, te)) throw GraphError("lift: input is not a trail of G(He)");
  if (te.start() != anchored.a1 || te.end() != anchored.a2) throw GraphError("lift: trail endpoints are not a1, a2");
  std::vector<char> on(he.num_vertices(), 0);
  for (VertexId v : te.vertices)
    if (v < he.num_vertices()) on[v] = 1;
  if (std::find(on.begin(), on.end(), 0) != on.end()) throw GraphError("lift: trail does not span V(He)");

  int core_m = core.core.num_edges();
  Lifter lift(core);
  VertexId ga1 = core.core_to_graph.at(red.permanent.at(anchored.a1));
  VertexId ga2 = core.core_to_graph.at(red.permanent.at(anchored.a2));
  const Edge& f1 = g.edge(anchored.e1);
  const Edge& f2 = g.edge(anchored.e2);
  if (!f1.has(ga1) || !f2.has(ga2)) throw GraphError("lift: anchors are not endpoints of e1, e2");
  lift.start(f1.other(ga1));
  lift.result().edges.push_back(anchored.e1);
  lift.result().vertices.push_back(ga1);

  auto through = [&](HyperedgeId hid, VertexId x, VertexId y) {
    VertexId cx = red.permanent.at(x), cy = red.permanent.at(y);
    if (hid < core_m) {
      lift.walk_core_edge(hid, cx);
      if (lift.result().vertices.back() != core.core_to_graph.at(cy)) throw GraphError("lift: core edge mismatch");
      return;
    }
    VertexId w = hid - core_m;
    lift.walk_core_edge(lift.core_edge_between(cx, w), cx);
    lift.walk_core_edge(lift.core_edge_between(w, cy), w);
  };

  for (size_t i = 0; i < te.edges.size(); ++i) {
    HyperedgeId hid = ig.edge_source.at(te.edges[i]);
    const Hyperedge& he_edge = he.hyperedge(hid);
    if (he_edge.size() == 2) {
      through(hid, te.vertices[i], te.vertices[i + 1]);
    } else {
      if (i + 1 >= te.edges.size() || ig.edge_source.at(te.edges[i + 1]) != hid)
        throw GraphError("lift: trail stops inside a hyperedge node");
      through(hid, te.vertices[i], te.vertices[i + 2]);
      ++i;
    }
  }
  lift.result().edges.push_back(anchored.e2);
  lift.result().vertices.push_back(f2.other(ga2));
  Trail out = lift.result();
  if (!is_valid_trail(g, out)) throw GraphError("lift: result is not a trail of G");
  if (!is_internally_dominating(out, g)) throw GraphError("lift: result is not internally dominating");
  return out;
}

}  // namespace lhc
