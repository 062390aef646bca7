#include "lhc/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "lhc/canon.hpp"

namespace lhc {

bool Hyperedge::contains(VertexId v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

Hypergraph3::Hypergraph3(int num_vertices) {
  if (num_vertices < 0) throw GraphError("negative vertex count");
  for (int i = 0; i < num_vertices; ++i) add_vertex();
}

VertexId Hypergraph3::add_vertex(std::string name) {
  names_.push_back(name.empty() ? std::to_string(n_) : std::move(name));
  return n_++;
}

void Hypergraph3::check(std::span<const VertexId> vertices) const {
  if (vertices.size() != 2 && vertices.size() != 3) throw GraphError("hyperedges must have 2 or 3 vertices");
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (!has_vertex(vertices[i])) throw GraphError("hyperedge uses unknown vertex " + std::to_string(vertices[i]));
    for (size_t j = 0; j < i; ++j) {
      if (vertices[i] == vertices[j]) throw GraphError("hyperedge repeats vertex " + std::to_string(vertices[i]));
    }
  }
}

HyperedgeId Hypergraph3::add_hyperedge(std::span<const VertexId> vertices) {
  const HyperedgeId id = next_id_;
  add_hyperedge_with_id(id, vertices);
  return id;
}

HyperedgeId Hypergraph3::add_hyperedge(std::initializer_list<VertexId> vertices) {
  return add_hyperedge(std::span<const VertexId>(vertices.begin(), vertices.size()));
}

void Hypergraph3::add_hyperedge_with_id(HyperedgeId id, std::span<const VertexId> vertices) {
  check(vertices);
  if (id < 0) throw GraphError("negative hyperedge id");
  if (has_hyperedge(id)) throw GraphError("duplicate hyperedge id " + std::to_string(id));
  Hyperedge e{id, {vertices.begin(), vertices.end()}};
  std::sort(e.vertices.begin(), e.vertices.end());
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), id, [](const Hyperedge& a, HyperedgeId b) { return a.id < b; });
  edges_.insert(pos, std::move(e));
  next_id_ = std::max(next_id_, id + 1);
}

void Hypergraph3::remove_hyperedge(HyperedgeId id) {
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), id, [](const Hyperedge& a, HyperedgeId b) { return a.id < b; });
  if (pos == edges_.end() || pos->id != id) throw GraphError("no hyperedge with id " + std::to_string(id));
  edges_.erase(pos);
}

void Hypergraph3::replace_hyperedge(HyperedgeId id, std::span<const VertexId> vertices) {
  check(vertices);
  remove_hyperedge(id);
  add_hyperedge_with_id(id, vertices);
}

const Hyperedge* Hypergraph3::find(HyperedgeId id) const {
  auto pos = std::lower_bound(edges_.begin(), edges_.end(), id, [](const Hyperedge& a, HyperedgeId b) { return a.id < b; });
  return (pos == edges_.end() || pos->id != id) ? nullptr : &*pos;
}

const Hyperedge& Hypergraph3::hyperedge(HyperedgeId id) const {
  const Hyperedge* e = find(id);
  if (e == nullptr) throw GraphError("no hyperedge with id " + std::to_string(id));
  return *e;
}

int Hypergraph3::count_of_size(int k) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [k](const Hyperedge& e) { return e.size() == k; }));
}

std::vector<HyperedgeId> Hypergraph3::incident(VertexId v) const {
  if (!has_vertex(v)) throw GraphError("vertex " + std::to_string(v) + " is not in the hypergraph");
  std::vector<HyperedgeId> out;
  for (const Hyperedge& e : edges_) {
    if (e.contains(v)) out.push_back(e.id);
  }
  return out;
}

int Hypergraph3::degree(VertexId v) const { return static_cast<int>(incident(v).size()); }

Partition::Partition(int ground_size, std::vector<std::vector<VertexId>> classes) {
  if (ground_size < 0) throw GraphError("negative ground set size");
  class_of_.assign(static_cast<size_t>(ground_size), -1);
  for (auto& c : classes) {
    if (c.empty()) throw GraphError("partition class is empty");
    std::sort(c.begin(), c.end());
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  for (size_t i = 0; i < classes.size(); ++i) {
    for (VertexId v : classes[i]) {
      if (v < 0 || v >= ground_size) throw GraphError("partition mentions vertex " + std::to_string(v) + " outside the ground set");
      if (class_of_[v] >= 0) throw GraphError("partition classes overlap at vertex " + std::to_string(v));
      class_of_[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < ground_size; ++v) {
    if (class_of_[v] < 0) throw GraphError("partition misses vertex " + std::to_string(v));
  }
  classes_ = std::move(classes);
}

Partition Partition::singletons(int n) {
  std::vector<std::vector<VertexId>> c;
  for (int v = 0; v < n; ++v) c.push_back({v});
  return Partition(n, std::move(c));
}

Partition Partition::whole(int n) {
  if (n == 0) return Partition(0, {});
  std::vector<VertexId> all(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) all[v] = v;
  return Partition(n, {all});
}

Partition Partition::from_labels(std::span<const int> labels) {
  std::map<int, std::vector<VertexId>> by_label;
  for (size_t v = 0; v < labels.size(); ++v) by_label[labels[v]].push_back(static_cast<VertexId>(v));
  std::vector<std::vector<VertexId>> c;
  for (auto& [label, members] : by_label) c.push_back(std::move(members));
  return Partition(static_cast<int>(labels.size()), std::move(c));
}

IncidenceGraph incidence_graph(const Hypergraph3& h) {
  IncidenceGraph out;
  const int n = h.num_vertices();
  out.graph = Multigraph(n);
  out.node_hyperedge.assign(static_cast<size_t>(n), -1);
  for (const Hyperedge& e : h.hyperedges()) {
    if (e.size() == 2) {
      out.graph.add_edge(e.vertices[0], e.vertices[1]);
      out.edge_source.push_back(e.id);
    } else {
      const VertexId node = out.graph.add_vertex();
      out.node_hyperedge.push_back(e.id);
      out.hyperedge_node[e.id] = node;
      for (VertexId v : e.vertices) {
        out.graph.add_edge(v, node);
        out.edge_source.push_back(e.id);
      }
    }
  }
  return out;
}

std::vector<HyperedgeId> boundary_h(const Hypergraph3& h, std::span<const VertexId> x) {
  auto in = membership(h.num_vertices(), x);
  std::vector<HyperedgeId> out;
  for (const Hyperedge& e : h.hyperedges()) {
    int inside = 0;
    for (VertexId v : e.vertices) inside += in[v];
    if (inside > 0 && inside < e.size()) out.push_back(e.id);
  }
  return out;
}

int degree_of_set(const Hypergraph3& h, std::span<const VertexId> x) { return static_cast<int>(boundary_h(h, x).size()); }

Hypergraph3 detach(const Hypergraph3& h, HyperedgeId id, VertexId v) {
  const Hyperedge& e = h.hyperedge(id);
  if (!e.contains(v)) throw GraphError("vertex " + std::to_string(v) + " is not in hyperedge " + std::to_string(id));
  Hypergraph3 out = h;
  if (e.size() == 2) {
    out.remove_hyperedge(id);
  } else {
    std::vector<VertexId> rest;
    for (VertexId w : e.vertices) {
      if (w != v) rest.push_back(w);
    }
    out.replace_hyperedge(id, rest);
  }
  return out;
}

QuotientResult quotient(const Hypergraph3& h, const Partition& p) {
  if (p.ground_size() != h.num_vertices()) throw GraphError("partition ground set does not match the hypergraph");
  QuotientResult out;
  out.hypergraph = Hypergraph3(p.size());
  for (const Hyperedge& e : h.hyperedges()) {
    std::vector<VertexId> image;
    for (VertexId v : e.vertices) image.push_back(p.class_of(v));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (image.size() < 2) continue;
    out.hypergraph.add_hyperedge_with_id(e.id, image);
    out.origin[e.id] = e.id;
  }
  return out;
}

namespace {

struct SwitchShape {
  HyperedgeId ex, ey, big;
  VertexId x, y, a, b;
};

std::optional<SwitchShape> switch_shape(const Hypergraph3& h, VertexId u) {
  auto inc = h.incident(u);
  if (inc.size() != 3) return std::nullopt;
  std::vector<HyperedgeId> twos;
  std::vector<HyperedgeId> threes;
  for (HyperedgeId id : inc) (h.hyperedge(id).size() == 2 ? twos : threes).push_back(id);
  if (twos.size() != 2 || threes.size() != 1) return std::nullopt;
  SwitchShape s{};
  s.ex = twos[0];
  s.ey = twos[1];
  s.big = threes[0];
  const auto& e1 = h.hyperedge(s.ex).vertices;
  const auto& e2 = h.hyperedge(s.ey).vertices;
  s.x = e1[0] == u ? e1[1] : e1[0];
  s.y = e2[0] == u ? e2[1] : e2[0];
  if (s.x == s.y) return std::nullopt;
  std::vector<VertexId> ab;
  for (VertexId w : h.hyperedge(s.big).vertices) {
    if (w != u) ab.push_back(w);
  }
  s.a = ab[0];
  s.b = ab[1];
  return s;
}

}  // namespace

bool switchable_at(const Hypergraph3& h, VertexId u) { return h.has_vertex(u) && switch_shape(h, u).has_value(); }

Hypergraph3 switch_at(const Hypergraph3& h, VertexId u) {
  if (!h.has_vertex(u)) throw GraphError("switch precondition: unknown vertex");
  auto s = switch_shape(h, u);
  if (!s) throw GraphError("switch precondition: vertex " + std::to_string(u) + " needs two distinct 2-hyperedges and one 3-hyperedge");
  Hypergraph3 out = h;
  std::vector<VertexId> ua{u, s->a};
  std::vector<VertexId> ub{u, s->b};
  std::vector<VertexId> uxy{u, s->x, s->y};
  out.replace_hyperedge(s->ex, ua);
  out.replace_hyperedge(s->ey, ub);
  out.replace_hyperedge(s->big, uxy);
  return out;
}

std::vector<int> hypergraph_certificate(const Hypergraph3& h) {
  auto inc = incidence_graph(h);
  ColoredMultigraph c = ColoredMultigraph::from(inc.graph);
  for (int v = h.num_vertices(); v < c.n; ++v) c.color[v] = 1;
  return canonical_form(c).certificate;
}

bool hypergraphs_isomorphic(const Hypergraph3& a, const Hypergraph3& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_hyperedges() != b.num_hyperedges()) return false;
  return hypergraph_certificate(a) == hypergraph_certificate(b);
}

namespace {

struct VecHash {
  size_t operator()(const std::vector<int>& v) const {
    size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

}  // namespace

std::vector<RelatedHypergraph> related_hypergraphs(const Hypergraph3& h, int max_depth) {
  std::vector<RelatedHypergraph> out{{h, {}}};
  std::unordered_map<std::vector<int>, int, VecHash> seen;
  seen.emplace(hypergraph_certificate(h), 0);
  size_t frontier_begin = 0;
  for (int depth = 0; depth < max_depth; ++depth) {
    const size_t frontier_end = out.size();
    for (size_t i = frontier_begin; i < frontier_end; ++i) {
      for (VertexId u = 0; u < h.num_vertices(); ++u) {
        if (!switchable_at(out[i].hypergraph, u)) continue;
        Hypergraph3 next = switch_at(out[i].hypergraph, u);
        auto cert = hypergraph_certificate(next);
        if (seen.contains(cert)) continue;
        seen.emplace(std::move(cert), static_cast<int>(out.size()));
        auto seq = out[i].switches;
        seq.push_back(u);
        out.push_back({std::move(next), std::move(seq)});
      }
    }
    frontier_begin = frontier_end;
  }
  return out;
}

std::optional<std::vector<VertexId>> related_search(const Hypergraph3& h1, const Hypergraph3& h2, int max_depth) {
  if (h1.num_vertices() != h2.num_vertices() || h1.num_hyperedges() != h2.num_hyperedges()) return std::nullopt;
  const auto target = hypergraph_certificate(h2);
  for (const auto& r : related_hypergraphs(h1, max_depth)) {
    if (hypergraph_certificate(r.hypergraph) == target) return r.switches;
  }
  return std::nullopt;
}

int hyper_edge_connectivity(const Hypergraph3& h) {
  const int n = h.num_vertices();
  if (n < 2) throw GraphError("edge connectivity needs at least two vertices");
  if (n > 24) throw GraphError("desk-scale bound exceeded: hyper_edge_connectivity enumerates subsets (|V| <= 24)");
  std::vector<std::uint32_t> masks;
  for (const Hyperedge& e : h.hyperedges()) {
    std::uint32_t m = 0;
    for (VertexId v : e.vertices) m |= 1u << v;
    masks.push_back(m);
  }
  int best = static_cast<int>(masks.size());
  // Vertex n-1 stays outside X, so X ranges over nonempty subsets of the others.
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t x = 1; x < limit; ++x) {
    int d = 0;
    for (std::uint32_t m : masks) {
      const std::uint32_t in = m & x;
      d += (in != 0 && in != m) ? 1 : 0;
    }
    best = std::min(best, d);
  }
  return best;
}

Hypergraph3 read_hypergraph(std::istream& in) {
  Hypergraph3 h;
  std::unordered_map<std::string, VertexId> index;
  auto vertex = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    VertexId v = h.add_vertex(name);
    index.emplace(name, v);
    return v;
  };
  std::string line;
  int line_no = 0;
  std::vector<std::pair<int, std::vector<VertexId>>> pending;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    std::string t;
    while (fields >> t) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0].front() == '#') {
      if (tok[0] == "#" && tok.size() >= 2 && tok[1] == "vertices") {
        for (size_t i = 2; i < tok.size(); ++i) vertex(tok[i]);
      }
      continue;
    }
    int id = -1;
    if (tok[0].back() == ':') {
      try {
        size_t used = 0;
        id = std::stoi(tok[0], &used);
        if (used + 1 != tok[0].size() || id < 0) throw std::invalid_argument("id");
      } catch (const std::exception&) {
        throw GraphError("bad hyperedge id on line " + std::to_string(line_no));
      }
      tok.erase(tok.begin());
    }
    if (tok.empty() || tok.size() > 3) throw GraphError("line " + std::to_string(line_no) + " must name 1 to 3 vertices");
    std::vector<VertexId> vs;
    for (const auto& name : tok) vs.push_back(vertex(name));
    if (vs.size() == 1) {
      if (id >= 0) throw GraphError("line " + std::to_string(line_no) + " gives an id to a single vertex");
      continue;
    }
    pending.emplace_back(id, std::move(vs));
  }
  for (auto& [id, vs] : pending) {
    if (id >= 0) {
      h.add_hyperedge_with_id(id, vs);
    }
  }
  for (auto& [id, vs] : pending) {
    if (id < 0) h.add_hyperedge(vs);
  }
  return h;
}

Hypergraph3 read_hypergraph_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_hypergraph(in);
}

std::string write_hypergraph(const Hypergraph3& h) {
  std::ostringstream out;
  out << "# vertices";
  for (VertexId v = 0; v < h.num_vertices(); ++v) out << ' ' << h.name(v);
  out << '\n';
  for (const Hyperedge& e : h.hyperedges()) {
    out << e.id << ':';
    for (VertexId v : e.vertices) out << ' ' << h.name(v);
    out << '\n';
  }
  return out.str();
}

}  // namespace lhc
