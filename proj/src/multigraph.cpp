#include "lhc/multigraph.hpp"

#include <algorithm>
#include <numeric>

namespace lhc {

Multigraph::Multigraph(int num_vertices) {
  if (num_vertices < 0) throw GraphError("negative vertex count");
  incidence_.resize(static_cast<size_t>(num_vertices));
}

Multigraph Multigraph::from_edges(int num_vertices, std::span<const Edge> edges) {
  Multigraph g(num_vertices);
  for (const Edge& e : edges) g.add_edge(e.u, e.v);
  return g;
}

VertexId Multigraph::add_vertex() {
  incidence_.emplace_back();
  return num_vertices() - 1;
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw GraphError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  }
  if (u == v) throw GraphError("loops are not allowed (vertex " + std::to_string(u) + ")");
  const EdgeId id = num_edges();
  edges_.push_back({u, v});
  incidence_[u].push_back(id);
  incidence_[v].push_back(id);
  return id;
}

std::vector<VertexId> Multigraph::neighbours(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : incident(v)) out.push_back(edges_[e].other(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  int count = 0;
  for (EdgeId e : incident(u)) count += edges_[e].other(u) == v ? 1 : 0;
  return count;
}

bool Multigraph::is_simple() const {
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (static_cast<int>(neighbours(v).size()) != degree(v)) return false;
  }
  return true;
}

SimpleGraph::SimpleGraph(int num_vertices) : n_(num_vertices) {
  if (n_ < 0) throw GraphError("negative vertex count");
  adj_.assign(static_cast<size_t>(n_) * n_, 0);
  nbrs_.resize(static_cast<size_t>(n_));
}

SimpleGraph SimpleGraph::from_multigraph(const Multigraph& g) {
  SimpleGraph s(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (!s.add_edge(e.u, e.v)) throw GraphError("parallel edge between " + std::to_string(e.u) + " and " + std::to_string(e.v));
  }
  return s;
}

bool SimpleGraph::add_edge(VertexId u, VertexId v) {
  if (!has_vertex(u) || !has_vertex(v)) throw GraphError("edge endpoint out of range");
  if (u == v) throw GraphError("loops are not allowed");
  if (adjacent(u, v)) return false;
  adj_[static_cast<size_t>(u) * n_ + v] = 1;
  adj_[static_cast<size_t>(v) * n_ + u] = 1;
  nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
  nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
  ++m_;
  return true;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v : nbrs_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Multigraph SimpleGraph::to_multigraph() const {
  auto es = edges();
  return Multigraph::from_edges(n_, es);
}

std::vector<char> membership(int n, std::span<const VertexId> subset) {
  std::vector<char> in(static_cast<size_t>(n), 0);
  for (VertexId v : subset) {
    if (v < 0 || v >= n) throw GraphError("vertex " + std::to_string(v) + " is not in the graph");
    in[v] = 1;
  }
  return in;
}

std::vector<std::vector<VertexId>> components(const Multigraph& g) {
  const int n = g.num_vertices();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<VertexId> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (EdgeId e : g.incident(v)) {
        VertexId w = g.edge(e).other(v);
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Multigraph& g) { return components(g).size() <= 1; }

Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> keep) {
  std::vector<int> index(static_cast<size_t>(g.num_vertices()), -1);
  for (size_t i = 0; i < keep.size(); ++i) index.at(keep[i]) = static_cast<int>(i);
  Multigraph h(static_cast<int>(keep.size()));
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) h.add_edge(index[e.u], index[e.v]);
  }
  return h;
}

}  // namespace lhc
