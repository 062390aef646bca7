#include "lhc/quasigraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace lhc {

void Quasigraph::assign(HyperedgeId e, VertexId a, VertexId b) {
  const Hyperedge& h = host_.hyperedge(e);
  if (a == b || !h.contains(a) || !h.contains(b)) {
    throw GraphError("pair {" + std::to_string(a) + "," + std::to_string(b) + "} is not a 2-subset of hyperedge " + std::to_string(e));
  }
  image_[e] = {std::min(a, b), std::max(a, b)};
}

std::optional<VertexPair> Quasigraph::image(HyperedgeId e) const {
  auto it = image_.find(e);
  if (it == image_.end()) return std::nullopt;
  return it->second;
}

PiStar pi_star(const Quasigraph& q) {
  PiStar out{Multigraph(q.host().num_vertices()), {}};
  for (const auto& [e, pair] : q.assignment()) {
    out.graph.add_edge(pair.first, pair.second);
    out.edge_label.push_back(e);
  }
  return out;
}

namespace {

bool is_forest(const Multigraph& g) {
  return g.num_edges() == g.num_vertices() - static_cast<int>(components(g).size());
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace

bool is_acyclic(const Quasigraph& q) { return is_forest(pi_star(q).graph); }

bool is_quasicycle(const Quasigraph& q) {
  const Multigraph g = pi_star(q).graph;
  if (g.num_edges() < 2) return false;
  int busy = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 0 && g.degree(v) != 2) return false;
    busy += g.degree(v) > 0 ? 1 : 0;
  }
  int nontrivial = 0;
  for (const auto& c : components(g)) nontrivial += g.degree(c.front()) > 0 ? 1 : 0;
  return nontrivial == 1 && busy == g.num_edges();
}

bool hypergraph_is_acyclic(const Hypergraph3& h) { return is_forest(incidence_graph(h).graph); }

bool connected_on(const Quasigraph& q, std::span<const VertexId> x) {
  if (x.empty()) return true;
  auto in = membership(q.host().num_vertices(), x);
  UnionFind uf(q.host().num_vertices());
  for (const auto& [e, p] : q.assignment()) {
    if (in[p.first] && in[p.second]) uf.unite(p.first, p.second);
  }
  const int root = uf.find(x.front());
  return std::all_of(x.begin(), x.end(), [&](VertexId v) { return uf.find(v) == root; });
}

bool anticonnected_on(const Quasigraph& q, std::span<const VertexId> x, EmptyImage mode, int max_size) {
  const Hypergraph3& h = q.host();
  std::vector<VertexId> xs(x.begin(), x.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  auto in = membership(h.num_vertices(), xs);
  if (xs.size() <= 1) return true;

  std::vector<int> pos(static_cast<size_t>(h.num_vertices()), -1);
  for (size_t i = 0; i < xs.size(); ++i) pos[xs[i]] = static_cast<int>(i);

  if (mode == EmptyImage::Contained) {
    // Unused hyperedges spanning x witness every nontrivial partition at once.
    UnionFind uf(static_cast<int>(xs.size()));
    for (const Hyperedge& f : h.hyperedges()) {
      if (q.used(f.id)) continue;
      int first = -1;
      for (VertexId v : f.vertices) {
        if (pos[v] < 0) continue;
        if (first < 0) first = pos[v];
        else uf.unite(first, pos[v]);
      }
    }
    bool spanning = true;
    for (size_t i = 1; i < xs.size(); ++i) spanning = spanning && uf.find(static_cast<int>(i)) == uf.find(0);
    if (spanning) return true;
  }
  if (static_cast<int>(xs.size()) > max_size) throw GraphError("desk-scale bound exceeded: anticonnectedness on " + std::to_string(xs.size()) + " vertices");

  // Hyperedges meeting x twice, keyed by the last x-position they touch.
  struct Probe {
    std::vector<int> members;  // positions in xs
    int a = -1, b = -1;        // image positions, -1 when outside x
    bool unused = false;
  };
  std::vector<std::vector<Probe>> closing(xs.size());
  for (const Hyperedge& f : h.hyperedges()) {
    Probe p;
    for (VertexId v : f.vertices) {
      if (pos[v] >= 0) p.members.push_back(pos[v]);
    }
    if (p.members.size() < 2) continue;
    auto img = q.image(f.id);
    if (!img) {
      if (mode == EmptyImage::NotContained) continue;
      p.unused = true;
    } else {
      p.a = pos[img->first];
      p.b = pos[img->second];
      if (p.a < 0 || p.b < 0) continue;  // image leaves x, never contained in a class
    }
    const int last = *std::max_element(p.members.begin(), p.members.end());
    closing[last].push_back(std::move(p));
  }

  std::vector<int> label(xs.size(), -1);
  std::function<bool(size_t, int)> find_bad = [&](size_t i, int used) -> bool {
    if (i == xs.size()) return used >= 2;
    for (int c = 0; c <= used; ++c) {
      label[i] = c;
      bool witnessed = false;
      for (const Probe& p : closing[i]) {
        bool crossing = false;
        for (int m : p.members) crossing = crossing || label[m] != label[p.members.front()];
        if (!crossing) continue;
        if (p.unused || label[p.a] == label[p.b]) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed && find_bad(i + 1, std::max(used, c + 1))) return true;
    }
    label[i] = -1;
    return false;
  };
  return !find_bad(0, 0);
}

QuotientQuasigraph quotient_quasigraph(const Quasigraph& q, const Partition& p) {
  QuotientQuasigraph out{quotient(q.host(), p), {}};
  out.quasigraph = Quasigraph(out.quotient.hypergraph);
  for (const auto& [e, pair] : q.assignment()) {
    if (!out.quotient.hypergraph.has_hyperedge(e)) continue;
    const int a = p.class_of(pair.first);
    const int b = p.class_of(pair.second);
    if (a != b) out.quasigraph.assign(e, a, b);
  }
  return out;
}

Hypergraph3 complement(const Quasigraph& q) {
  Hypergraph3 out = q.host();
  for (const auto& [e, pair] : q.assignment()) out.remove_hyperedge(e);
  return out;
}

namespace {

std::string set_text(std::span<const VertexId> xs) {
  std::ostringstream s;
  s << '{';
  for (size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i];
  s << '}';
  return s.str();
}

}  // namespace

SkeletalCheck is_skeletal(const Quasigraph& q, const Partition& p, EmptyImage mode) {
  SkeletalCheck out;
  for (const auto& cls : p.classes()) {
    const bool conn = connected_on(q, cls);
    const bool anti = anticonnected_on(q, cls, mode);
    out.classes_connected = out.classes_connected && conn;
    out.classes_anticonnected = out.classes_anticonnected && anti;
    out.transcript.push_back("class " + set_text(cls) + ": connected=" + (conn ? "yes" : "no") + " anticonnected=" + (anti ? "yes" : "no"));
  }
  auto qq = quotient_quasigraph(q, p);
  out.complement_acyclic = hypergraph_is_acyclic(complement(qq.quasigraph));
  out.transcript.push_back(std::string("complement of quotient acyclic=") + (out.complement_acyclic ? "yes" : "no"));
  return out;
}

RootedOrientation rooted_orientation(const Quasigraph& q, std::span<const VertexId> roots) {
  if (!is_acyclic(q)) throw GraphError("rooted orientation needs an acyclic quasigraph");
  const PiStar ps = pi_star(q);
  const auto comps = components(ps.graph);
  const int n = ps.graph.num_vertices();
  std::vector<int> comp_of(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < comps.size(); ++i) {
    for (VertexId v : comps[i]) comp_of[v] = static_cast<int>(i);
  }
  std::vector<VertexId> chosen(comps.size(), -1);
  for (VertexId r : roots) {
    if (r < 0 || r >= n) throw GraphError("root " + std::to_string(r) + " is not a vertex");
    if (chosen[comp_of[r]] >= 0) throw GraphError("two roots in one component of pi*");
    chosen[comp_of[r]] = r;
  }
  if (std::find(chosen.begin(), chosen.end(), -1) != chosen.end()) throw GraphError("a component of pi* has no root");

  RootedOrientation out;
  out.roots = chosen;
  std::sort(out.roots.begin(), out.roots.end());
  out.associated.assign(static_cast<size_t>(n), -1);
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (VertexId r : out.roots) {
    std::vector<VertexId> stack{r};
    seen[r] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId ge : ps.graph.incident(v)) {
        VertexId w = ps.graph.edge(ge).other(v);
        if (seen[w]) continue;
        seen[w] = 1;
        const HyperedgeId e = ps.edge_label[ge];
        out.associated[w] = e;
        out.tail[e] = w;
        out.head[e] = v;
        stack.push_back(w);
      }
    }
  }
  return out;
}

RootedOrientation default_orientation(const Quasigraph& q) {
  std::vector<VertexId> roots;
  for (const auto& c : components(pi_star(q).graph)) roots.push_back(c.front());
  return rooted_orientation(q, roots);
}

namespace {

// The unique 3-hyperedge at u when u lies in exactly three hyperedges, one of size 3.
std::optional<HyperedgeId> lone_triple(const Hypergraph3& h, VertexId u) {
  auto inc = h.incident(u);
  if (inc.size() != 3) return std::nullopt;
  std::optional<HyperedgeId> triple;
  for (HyperedgeId e : inc) {
    if (h.hyperedge(e).size() == 3) {
      if (triple) return std::nullopt;
      triple = e;
    }
  }
  return triple;
}

}  // namespace

std::vector<VertexId> bad_leaves(const Quasigraph& q, const RootedOrientation& o) {
  const PiStar ps = pi_star(q);
  std::vector<VertexId> out;
  for (VertexId u = 0; u < ps.graph.num_vertices(); ++u) {
    if (ps.graph.degree(u) != 1) continue;
    auto e = lone_triple(q.host(), u);
    if (e && o.associated.at(u) == *e) out.push_back(u);
  }
  return out;
}

bool has_bad_leaf_any_roots(const Quasigraph& q) {
  // A leaf u tails its only edge under every rooting of its component except at u,
  // and such a rooting always exists since the component has another vertex.
  const PiStar ps = pi_star(q);
  for (VertexId u = 0; u < ps.graph.num_vertices(); ++u) {
    if (ps.graph.degree(u) != 1) continue;
    auto e = lone_triple(q.host(), u);
    if (e && ps.edge_label[ps.graph.incident(u)[0]] == *e) return true;
  }
  return false;
}

namespace {

struct PartitionSearch {
  const Hypergraph3& h;
  const Partition& p;
  const SkeletalOptions& opt;
  long long& nodes;

  struct Choice {
    HyperedgeId id;
    int image_size;                                // |e/P|, 1 when not crossing
    std::vector<VertexPair> inside, across;        // candidate pairs
  };
  std::vector<Choice> choices;
  std::vector<int> suffix_inside;                  // hyperedges from i on offering an inside pair
  std::vector<std::optional<VertexPair>> picked;
  int n_classes = 0;

  std::optional<Quasigraph> run() {
    n_classes = p.size();
    for (const Hyperedge& e : h.hyperedges()) {
      Choice c{e.id, 0, {}, {}};
      std::vector<int> cls;
      for (VertexId v : e.vertices) cls.push_back(p.class_of(v));
      std::sort(cls.begin(), cls.end());
      c.image_size = static_cast<int>(std::unique(cls.begin(), cls.end()) - cls.begin());
      for (size_t i = 0; i < e.vertices.size(); ++i) {
        for (size_t j = i + 1; j < e.vertices.size(); ++j) {
          VertexPair pr{e.vertices[i], e.vertices[j]};
          (p.class_of(pr.first) == p.class_of(pr.second) ? c.inside : c.across).push_back(pr);
        }
      }
      choices.push_back(std::move(c));
    }
    suffix_inside.assign(choices.size() + 1, 0);
    for (size_t i = choices.size(); i-- > 0;) suffix_inside[i] = suffix_inside[i + 1] + (choices[i].inside.empty() ? 0 : 1);
    picked.assign(choices.size(), std::nullopt);
    int need = 0;
    for (const auto& cls : p.classes()) need += static_cast<int>(cls.size()) - 1;
    UnionFind uf(h.num_vertices());
    if (dfs(0, uf, need, 0)) return build();
    return std::nullopt;
  }

  Quasigraph build() const {
    Quasigraph q(h);
    for (size_t i = 0; i < choices.size(); ++i) {
      if (picked[i]) q.assign(choices[i].id, picked[i]->first, picked[i]->second);
    }
    return q;
  }

  bool accept() const {
    Quasigraph q = build();
    for (const auto& cls : p.classes()) {
      if (!anticonnected_on(q, cls, opt.mode, static_cast<int>(cls.size()))) return false;
    }
    if (has_bad_leaf_any_roots(q)) return false;
    auto qq = quotient_quasigraph(q, p);
    return hypergraph_is_acyclic(complement(qq.quasigraph));
  }

  // penalty = 2-images plus twice the 3-images of crossing hyperedges left out of tau.
  bool dfs(size_t i, UnionFind& uf, int need, int penalty) {
    if (++nodes > opt.node_budget) throw GraphError("skeletal search budget exceeded");
    if (penalty > n_classes - 1) return false;
    if (need > suffix_inside[i]) return false;
    if (i == choices.size()) return need == 0 && accept();
    const Choice& c = choices[i];
    const int miss = c.image_size == 1 ? 0 : (c.image_size == 2 ? 1 : 2);
    for (const VertexPair& pr : c.inside) {
      UnionFind saved = uf;
      if (!uf.unite(pr.first, pr.second)) continue;
      picked[i] = pr;
      if (dfs(i + 1, uf, need - 1, penalty + miss)) return true;
      uf = std::move(saved);
    }
    for (const VertexPair& pr : c.across) {
      UnionFind saved = uf;
      if (!uf.unite(pr.first, pr.second)) continue;
      picked[i] = pr;
      if (dfs(i + 1, uf, need, penalty)) return true;
      uf = std::move(saved);
    }
    picked[i] = std::nullopt;
    return dfs(i + 1, uf, need, penalty + miss);
  }
};

// Cheap necessary conditions: each class connectable by inside pairs, and at most
// 2(|P|-1) crossing hyperedges since tau* and the complement are both forests.
bool partition_feasible(const Hypergraph3& h, const Partition& p) {
  int crossing = 0;
  UnionFind uf(h.num_vertices());
  for (const Hyperedge& e : h.hyperedges()) {
    bool cross = false;
    for (VertexId v : e.vertices) cross = cross || p.class_of(v) != p.class_of(e.vertices.front());
    crossing += cross ? 1 : 0;
    for (size_t i = 0; i < e.vertices.size(); ++i) {
      for (size_t j = i + 1; j < e.vertices.size(); ++j) {
        if (p.class_of(e.vertices[i]) == p.class_of(e.vertices[j])) uf.unite(e.vertices[i], e.vertices[j]);
      }
    }
  }
  if (crossing > 2 * (p.size() - 1)) return false;
  for (const auto& cls : p.classes()) {
    for (VertexId v : cls) {
      if (uf.find(v) != uf.find(cls.front())) return false;
    }
  }
  return true;
}

// Restricted growth strings with exactly k blocks, in lexicographic order.
bool for_each_partition(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> label(static_cast<size_t>(n), 0);
  std::function<bool(int, int)> rec = [&](int i, int used) -> bool {
    if (n - i < k - used) return false;
    if (i == n) return used == k && visit(label);
    for (int c = 0; c <= used && c < k; ++c) {
      label[i] = c;
      if (rec(i + 1, std::max(used, c + 1))) return true;
    }
    return false;
  };
  if (n == 0) return k == 0 && visit(label);
  return rec(0, 0);
}

}  // namespace

SkeletalWitness skeletal_search(const Hypergraph3& h, const SkeletalOptions& opt) {
  const int n = h.num_vertices();
  if (n > opt.max_vertices || h.num_hyperedges() > opt.max_hyperedges) {
    throw GraphError("desk-scale bound exceeded: skeletal search limited to " + std::to_string(opt.max_vertices) + " vertices and " +
                     std::to_string(opt.max_hyperedges) + " hyperedges");
  }
  if (n == 0) throw GraphError("skeletal search needs a vertex");
  const auto related = related_hypergraphs(h, opt.switch_depth);
  long long nodes = 0;
  const int top = opt.max_classes < 0 ? n : std::min(n, opt.max_classes);
  for (int k = std::max(1, opt.min_classes); k <= top; ++k) {
    for (const auto& r : related) {
      std::optional<SkeletalWitness> found;
      for_each_partition(n, k, [&](const std::vector<int>& labels) {
        Partition p = Partition::from_labels(labels);
        if (!partition_feasible(r.hypergraph, p)) return false;
        PartitionSearch s{r.hypergraph, p, opt, nodes, {}, {}, {}, 0};
        auto q = s.run();
        if (!q) return false;
        SkeletalWitness w{r.hypergraph, r.switches, std::move(*q), p, {}, 0};
        std::ostringstream sw;
        sw << "switches:";
        for (VertexId u : r.switches) sw << ' ' << u;
        w.transcript.push_back(sw.str());
        w.transcript.push_back("classes: " + std::to_string(p.size()));
        w.transcript.push_back("sigma uses " + std::to_string(w.sigma.num_used()) + " hyperedges; acyclic=" + (is_acyclic(w.sigma) ? "yes" : "no"));
        w.transcript.push_back(std::string("bad leaf under some rooting=") + (has_bad_leaf_any_roots(w.sigma) ? "yes" : "no"));
        auto check = is_skeletal(w.sigma, p, opt.mode);
        w.transcript.insert(w.transcript.end(), check.transcript.begin(), check.transcript.end());
        found = std::move(w);
        return true;
      });
      if (found) {
        found->nodes = nodes;
        return std::move(*found);
      }
    }
  }
  const std::string what = "no skeletal witness for a hypergraph with " + std::to_string(n) + " vertices and " +
                           std::to_string(h.num_hyperedges()) + " hyperedges";
  if (opt.min_classes > 1 || opt.max_classes >= 0 || opt.switch_depth < 1)
    throw SearchExhausted(what + " within the restricted class range");
  throw SearchExhausted("theorem falsified at this scale: " + what);
}

bool verify_witness(const Hypergraph3& original, const SkeletalWitness& w, EmptyImage mode) {
  Hypergraph3 cur = original;
  for (VertexId u : w.switches) cur = switch_at(cur, u);
  if (cur.num_vertices() != w.related.num_vertices() || cur.num_hyperedges() != w.related.num_hyperedges()) return false;
  for (size_t i = 0; i < cur.hyperedges().size(); ++i) {
    const auto& a = cur.hyperedges()[i];
    const auto& b = w.related.hyperedges()[i];
    if (a.id != b.id || a.vertices != b.vertices) return false;
  }
  const Quasigraph& s = w.sigma;
  if (s.host().num_hyperedges() != cur.num_hyperedges()) return false;
  for (const auto& [e, pr] : s.assignment()) {
    if (!cur.has_hyperedge(e) || !cur.hyperedge(e).contains(pr.first) || !cur.hyperedge(e).contains(pr.second)) return false;
  }
  if (w.partition.ground_size() != cur.num_vertices()) return false;
  return is_acyclic(s) && !has_bad_leaf_any_roots(s) && is_skeletal(s, w.partition, mode).ok();
}

}  // namespace lhc
