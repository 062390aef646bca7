#include "lhc/generators.hpp"

#include <algorithm>
#include <set>

#include "lhc/canon.hpp"
#include "lhc/connectivity.hpp"

namespace lhc {

Multigraph gen_fig1b(int q) {
  if (q < 1 || q % 2 == 0) throw GraphError("fig1b needs an odd q >= 1");
  Multigraph g(4);
  for (VertexId i = 0; i < 4; ++i)
    for (VertexId j = i + 1; j < 4; ++j)
      for (int k = 0; k < q; ++k) {
        VertexId a = g.add_vertex();
        VertexId b = g.add_vertex();
        g.add_edge(i, a);
        g.add_edge(a, b);
        g.add_edge(b, j);
      }
  return g;
}

Multigraph gen_pendant(const Multigraph& base) {
  Multigraph g = base;
  for (VertexId v = 0; v < base.num_vertices(); ++v) g.add_edge(v, g.add_vertex());
  return g;
}

Multigraph multiply_edges(const Multigraph& base, int copies) {
  Multigraph g(base.num_vertices());
  for (const Edge& e : base.edges())
    for (int i = 0; i < copies; ++i) g.add_edge(e.u, e.v);
  return g;
}

Multigraph complete_graph(int n) {
  Multigraph g(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Multigraph complete_bipartite(int a, int b) {
  Multigraph g(a + b);
  for (VertexId i = 0; i < a; ++i)
    for (VertexId j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Multigraph octahedron() {
  Multigraph g(6);
  for (VertexId i = 0; i < 6; ++i)
    for (VertexId j = i + 1; j < 6; ++j)
      if (j != i + 3) g.add_edge(i, j);
  return g;
}

Multigraph add_hat(const Multigraph& base, const std::vector<VertexId>& feet) {
  Multigraph g = base;
  VertexId h = g.add_vertex();
  for (VertexId v : feet) g.add_edge(h, v);
  return g;
}

Multigraph subdivide(const Multigraph& base, EdgeId e) {
  Multigraph g(base.num_vertices() + 1);
  VertexId s = base.num_vertices();
  for (EdgeId f = 0; f < base.num_edges(); ++f) {
    const Edge& ed = base.edge(f);
    if (f == e) {
      g.add_edge(ed.u, s);
      g.add_edge(s, ed.v);
    } else {
      g.add_edge(ed.u, ed.v);
    }
  }
  return g;
}

Multigraph protected_hat(const Multigraph& base, const std::vector<VertexId>& feet) {
  Multigraph g = add_hat(base, feet);
  return subdivide(g, g.num_edges() - 1);
}

std::vector<Multigraph> enumerate_multigraphs(int max_vertices, int max_edges, int max_multiplicity) {
  std::vector<Multigraph> out;
  std::vector<Multigraph> layer;
  std::set<std::vector<int>> seen;
  if (max_vertices >= 2 && max_edges >= 1) {
    Multigraph k2(2);
    k2.add_edge(0, 1);
    layer.push_back(k2);
  }
  for (int m = 1; m <= max_edges && !layer.empty(); ++m) {
    for (const auto& g : layer) out.push_back(g);
    if (m == max_edges) break;
    std::vector<Multigraph> next;
    auto offer = [&](Multigraph h) {
      if (seen.insert(multigraph_certificate(h)).second) next.push_back(std::move(h));
    };
    for (const auto& g : layer) {
      int n = g.num_vertices();
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) {
          if (max_multiplicity > 0 && g.multiplicity(u, v) >= max_multiplicity) continue;
          Multigraph h = g;
          h.add_edge(u, v);
          offer(std::move(h));
        }
      if (n + 1 <= max_vertices)
        for (VertexId u = 0; u < n; ++u) {
          Multigraph h = g;
          h.add_edge(u, h.add_vertex());
          offer(std::move(h));
        }
      if (n + 2 <= max_vertices) {
        Multigraph h = g;
        VertexId a = h.add_vertex();
        h.add_edge(a, h.add_vertex());
        offer(std::move(h));
      }
    }
    layer = std::move(next);
  }
  return out;
}

std::vector<NamedGraph> find_qualifying_instances(int budget, int max_edges) {
  std::vector<NamedGraph> candidates;
  const Multigraph k5x2 = multiply_edges(complete_graph(5), 2);
  const Multigraph k4x3 = multiply_edges(complete_graph(4), 3);
  const Multigraph octx2 = multiply_edges(octahedron(), 2);
  candidates.push_back({"K5x2", k5x2});
  candidates.push_back({"K4x3+3hats", add_hat(add_hat(add_hat(k4x3, {0, 1, 2}), {1, 2, 3}), {0, 2, 3})});
  candidates.push_back({"K4x3+4hats",
                        add_hat(add_hat(add_hat(add_hat(k4x3, {0, 1, 2}), {1, 2, 3}), {0, 2, 3}), {0, 1, 3})});
  candidates.push_back({"K4x3+3hats/subdivided", subdivide(add_hat(add_hat(add_hat(k4x3, {0, 1, 2}), {1, 2, 3}), {0, 2, 3}), 0)});
  candidates.push_back({"K33x3", multiply_edges(complete_bipartite(3, 3), 3)});
  candidates.push_back({"Octx2+2hats", add_hat(add_hat(octx2, {0, 1, 2}), {3, 4, 5})});
  candidates.push_back({"Octx2/subdivided", subdivide(octx2, 0)});
  candidates.push_back({"K5x2+hat", add_hat(k5x2, {0, 1, 2})});
  candidates.push_back({"K5x2+2hats", add_hat(add_hat(k5x2, {0, 1, 2}), {2, 3, 4})});
  candidates.push_back({"K5x2/subdivided", subdivide(k5x2, 0)});
  candidates.push_back({"K5x2+pendant", [&] {
                          Multigraph g = k5x2;
                          g.add_edge(0, g.add_vertex());
                          return g;
                        }()});
  candidates.push_back({"K5x2+protected", protected_hat(k5x2, {0, 1, 2})});
  candidates.push_back({"K5x2+protected+hat", add_hat(protected_hat(k5x2, {0, 1, 2}), {2, 3, 4})});
  candidates.push_back({"K4x3+protected+hat", add_hat(protected_hat(k4x3, {0, 1, 2}), {1, 2, 3})});
  candidates.push_back({"Octx2+protected", protected_hat(octx2, {0, 1, 2})});
  candidates.push_back({"K6x2", multiply_edges(complete_graph(6), 2)});
  std::vector<NamedGraph> out;
  for (auto& c : candidates) {
    if (static_cast<int>(out.size()) >= budget) break;
    if (c.graph.num_edges() > max_edges) continue;
    if (line_profile(c.graph).qualifying) out.push_back(std::move(c));
  }
  return out;
}

Hypergraph3 random_hypergraph(int n, int m, double p3, std::mt19937& rng) {
  if (n < 2) throw GraphError("random hypergraph needs at least 2 vertices");
  Hypergraph3 h(n);
  std::bernoulli_distribution triple(n >= 3 ? p3 : 0.0);
  std::vector<VertexId> vs(n);
  for (VertexId v = 0; v < n; ++v) vs[v] = v;
  for (int i = 0; i < m; ++i) {
    std::shuffle(vs.begin(), vs.end(), rng);
    int k = triple(rng) ? 3 : 2;
    h.add_hyperedge(std::span<const VertexId>(vs.data(), k));
  }
  return h;
}

std::vector<Hypergraph3> enumerate_hypergraphs(int n, int max_hyperedges) {
  std::vector<std::vector<VertexId>> shapes;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) {
      shapes.push_back({a, b});
      for (VertexId c = b + 1; c < n; ++c) shapes.push_back({a, b, c});
    }
  std::vector<Hypergraph3> out;
  std::set<std::vector<int>> seen;
  std::vector<Hypergraph3> layer{Hypergraph3(n)};
  seen.insert(hypergraph_certificate(layer.front()));
  out.push_back(layer.front());
  for (int m = 1; m <= max_hyperedges; ++m) {
    std::vector<Hypergraph3> next;
    for (const auto& h : layer)
      for (const auto& s : shapes) {
        Hypergraph3 x = h;
        x.add_hyperedge(s);
        if (seen.insert(hypergraph_certificate(x)).second) next.push_back(std::move(x));
      }
    for (const auto& h : next) out.push_back(h);
    layer = std::move(next);
  }
  return out;
}

}  // namespace lhc
