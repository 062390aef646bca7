#include "lhc/endgame.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace lhc {

std::string to_string(EndgameRoute r) {
  switch (r) {
    case EndgameRoute::Collapsed: return "collapsed";
    case EndgameRoute::SmallCore: return "small-core";
    case EndgameRoute::OneClass: return "one-class";
    case EndgameRoute::TwoClass: return "two-class";
    case EndgameRoute::Switched: return "switched";
    case EndgameRoute::Fallback: return "fallback";
  }
  return "unknown";
}

bool verify_endgame_trail(const Multigraph& g, const Trail& t, EdgeId e1, EdgeId e2) {
  return is_valid_trail(g, t) && t.length() >= 2 && t.edges.front() == e1 && t.edges.back() == e2 &&
         is_internally_dominating(t, g);
}

namespace {

bool contains(const std::vector<VertexId>& v, VertexId x) { return std::find(v.begin(), v.end(), x) != v.end(); }

std::string join_ids(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

Trail spanning_search(const Hypergraph3& h, VertexId a, VertexId b, int max_edges) {
  IncidenceGraph ig = incidence_graph(h);
  TrailConstraints c;
  c.must_span.resize(h.num_vertices());
  std::iota(c.must_span.begin(), c.must_span.end(), 0);
  c.max_edges = max_edges;
  auto t = find_trail(ig.graph, a, b, c);
  if (!t) throw SearchExhausted("no trail of G(He) spans V(He)");
  return *t;
}

// Carries a trail of G(sub) into G(h), where sub is h restricted to `keep`
// (sub vertex i is keep[i], hyperedge ids shared).
Trail embed_trail(const Trail& t, const Hypergraph3& sub, const Hypergraph3& h, const std::vector<VertexId>& keep) {
  IncidenceGraph is = incidence_graph(sub);
  IncidenceGraph ih = incidence_graph(h);
  auto map_node = [&](VertexId v) {
    if (v < sub.num_vertices()) return keep.at(v);
    return ih.hyperedge_node.at(is.node_hyperedge.at(v));
  };
  std::map<std::pair<HyperedgeId, VertexId>, EdgeId> by_source;
  for (EdgeId e = 0; e < ih.graph.num_edges(); ++e) {
    const Edge& ed = ih.graph.edge(e);
    by_source[{ih.edge_source[e], std::min(ed.u, ed.v)}] = e;
  }
  Trail out;
  for (VertexId v : t.vertices) out.vertices.push_back(map_node(v));
  for (size_t i = 0; i < t.edges.size(); ++i) {
    HyperedgeId hid = is.edge_source.at(t.edges[i]);
    VertexId lo = std::min(out.vertices[i], out.vertices[i + 1]);
    out.edges.push_back(by_source.at({hid, lo}));
  }
  return out;
}

EdgeId incidence_edge_of(const Hypergraph3& h, HyperedgeId id) {
  IncidenceGraph ig = incidence_graph(h);
  for (EdgeId e = 0; e < ig.graph.num_edges(); ++e)
    if (ig.edge_source[e] == id) return e;
  throw GraphError("hyperedge has no incidence edge");
}

struct TwoClassPlan {
  VertexId x = -1, y1 = -1, y2 = -1, y3 = -1;
  HyperedgeId f = -1;
  bool x_first = true;  // a1 = x, a2 = y2; otherwise a1 = y1, a2 = x
};

std::optional<TwoClassPlan> plan_two_class(const Multigraph& g, const Reduction& r, const AnchoredHypergraph& an,
                                           const Partition& s, std::vector<std::string>& log) {
  const Hypergraph3& h0 = r.hyper.h0;
  if (an.k1 == an.k2) {
    log.push_back("two-class: k(e1) = k(e2), outside the branch");
    return std::nullopt;
  }
  const Hyperedge& k1 = h0.hyperedge(an.k1);
  const Hyperedge& k2 = h0.hyperedge(an.k2);
  if (k1.size() != 2 || k2.size() != 2) {
    log.push_back("two-class: k(e1) or k(e2) has size 3");
    return std::nullopt;
  }
  for (const auto& cls : s.classes()) {
    if (cls.size() != 1) continue;
    TwoClassPlan p;
    p.x = cls.front();
    if (h0.degree(p.x) != 3 || !k1.contains(p.x) || !k2.contains(p.x)) continue;
    for (HyperedgeId e : h0.incident(p.x))
      if (e != an.k1 && e != an.k2) p.f = e;
    const Hyperedge& f = h0.hyperedge(p.f);
    if (f.size() != 2) continue;
    auto other = [&](const Hyperedge& e) { return e.vertices[0] == p.x ? e.vertices[1] : e.vertices[0]; };
    p.y1 = other(k1);
    p.y2 = other(k2);
    p.y3 = other(f);
    if (an.he.incident(p.x) != std::vector<HyperedgeId>{p.f}) continue;
    auto c1 = anchor_candidates(g, r.core, r.hyper, an.e1);
    auto c2 = anchor_candidates(g, r.core, r.hyper, an.e2);
    if (contains(c1, p.x) && contains(c2, p.y2)) {
      p.x_first = true;
    } else if (contains(c1, p.y1) && contains(c2, p.x)) {
      p.x_first = false;
    } else {
      log.push_back("two-class: no anchor choice puts x at an end");
      continue;
    }
    return p;
  }
  log.push_back("two-class: no trivial class {x} matching the branch");
  return std::nullopt;
}

}  // namespace

EndgameResult endgame(const Multigraph& g, const Reduction& r, EdgeId e1, EdgeId e2, const EndgameOptions& options) {
  if (!g.has_edge(e1) || !g.has_edge(e2)) throw GraphError("edge out of range");
  if (e1 == e2) throw GraphError("endgame needs two distinct edges");
  EndgameResult out;
  auto& log = out.transcript;
  log.push_back("pair e1=" + std::to_string(e1) + " e2=" + std::to_string(e2));

  auto direct = [&](EndgameRoute route) {
    out.route = route;
    auto t = dominating_trail(g, e1, e2, options.max_trail_edges);
    if (!t) throw SearchExhausted("no internally dominating (e1,e2)-trail in G");
    out.trail = *t;
  };

  const auto k1 = k_map(g, r.core, r.hyper, e1);
  const auto k2 = k_map(g, r.core, r.hyper, e2);
  if (!k1 || !k2) {
    log.push_back("k(e) empty: direct search in G");
    direct(EndgameRoute::Collapsed);
  } else if (r.core.core.num_vertices() <= 5) {
    out.small = check_lemma_small(r.core.core);
    log.push_back(std::string("core has ") + std::to_string(r.core.core.num_vertices()) +
                  " vertices; two spanning trees " + (out.small->trees ? "found" : "missing"));
    direct(EndgameRoute::SmallCore);
  } else {
    AnchoredHypergraph an = build_he(g, r.core, r.hyper, e1, e2);
    for (const auto& line : an.log) log.push_back(line);
    log.push_back("anchors a1=" + std::to_string(an.a1) + " a2=" + std::to_string(an.a2) + " k1=" +
                  std::to_string(an.k1) + " k2=" + std::to_string(an.k2));
    SkeletalWitness w = skeletal_search(an.he, options.skeletal);
    log.push_back("skeletal witness: " + std::to_string(w.partition.size()) + " classes, switches [" +
                  join_ids(w.switches) + "]");
    Trail te;
    if (!w.switches.empty()) {
      out.route = EndgameRoute::Switched;
      te = spanning_search(an.he, an.a1, an.a2, options.max_join_edges);
    } else if (w.partition.size() == 1) {
      out.route = EndgameRoute::OneClass;
      te = qt_join(an.he, an.a1, an.a2, w.sigma, options.max_join_edges);
    } else if (auto plan = w.partition.size() == 2 ? plan_two_class(g, r, an, w.partition, log) : std::nullopt) {
      out.route = EndgameRoute::TwoClass;
      const Hypergraph3& he = an.he;
      std::vector<VertexId> keep;
      for (VertexId v = 0; v < he.num_vertices(); ++v)
        if (v != plan->x) keep.push_back(v);
      std::vector<VertexId> index(he.num_vertices(), -1);
      for (size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<VertexId>(i);
      Hypergraph3 h1(static_cast<int>(keep.size()));
      for (const Hyperedge& e : he.hyperedges()) {
        if (e.contains(plan->x)) continue;
        std::vector<VertexId> vs;
        for (VertexId v : e.vertices) vs.push_back(index[v]);
        h1.add_hyperedge_with_id(e.id, vs);
      }
      Quasigraph s1(h1);
      for (const auto& [id, pair] : w.sigma.assignment())
        if (h1.has_hyperedge(id)) s1.assign(id, index[pair.first], index[pair.second]);
      an.a1 = plan->x_first ? plan->x : plan->y1;
      an.a2 = plan->x_first ? plan->y2 : plan->x;
      log.push_back("two-class: x=" + std::to_string(plan->x) + " f=" + std::to_string(plan->f) + " y3=" +
                    std::to_string(plan->y3) + (plan->x_first ? " (a1=x)" : " (a2=x)"));
      EdgeId fe = incidence_edge_of(he, plan->f);
      if (plan->x_first) {
        Trail t1 = embed_trail(qt_join(h1, index[plan->y3], index[plan->y2], s1, options.max_join_edges), h1, he, keep);
        te.vertices = {plan->x};
        te.edges = {fe};
        te.vertices.insert(te.vertices.end(), t1.vertices.begin(), t1.vertices.end());
        te.edges.insert(te.edges.end(), t1.edges.begin(), t1.edges.end());
      } else {
        te = embed_trail(qt_join(h1, index[plan->y1], index[plan->y3], s1, options.max_join_edges), h1, he, keep);
        te.edges.push_back(fe);
        te.vertices.push_back(plan->x);
      }
    } else {
      out.route = EndgameRoute::Fallback;
      log.push_back("fallback: spanning search in G(He)");
      te = spanning_search(an.he, an.a1, an.a2, options.max_join_edges);
    }
    out.trail = lift_trail(te, g, r.core, r.hyper, an);
    out.anchored = std::move(an);
    out.witness = std::move(w);
  }
  out.verified = verify_endgame_trail(g, out.trail, e1, e2);
  log.push_back(std::string("route ") + to_string(out.route) + ", trail length " + std::to_string(out.trail.length()) +
                (out.verified ? ", verified" : ", NOT verified"));
  return out;
}

EndgameResult endgame(const Multigraph& g, EdgeId e1, EdgeId e2, const EndgameOptions& options) {
  return endgame(g, reduce(g), e1, e2, options);
}

}  // namespace lhc
