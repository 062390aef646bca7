#pragma once

#include <random>
#include <string>
#include <vector>

#include "lhc/hypergraph.hpp"
#include "lhc/multigraph.hpp"

namespace lhc {

/// K4 with every edge replaced by q internally disjoint paths of length 3 (q odd).
Multigraph gen_fig1b(int q);

/// base plus one new leaf at every vertex.
Multigraph gen_pendant(const Multigraph& base);

/// Replaces every edge by `copies` parallel edges.
Multigraph multiply_edges(const Multigraph& base, int copies);
Multigraph complete_graph(int n);
Multigraph complete_bipartite(int a, int b);
Multigraph octahedron();
/// Adds a new vertex joined to each of the given distinct vertices.
Multigraph add_hat(const Multigraph& base, const std::vector<VertexId>& feet);
/// A hat whose last leg is subdivided, so the hat vertex stays permanent.
Multigraph protected_hat(const Multigraph& base, const std::vector<VertexId>& feet);
/// Subdivides edge e once; the new vertex gets the next id.
Multigraph subdivide(const Multigraph& base, EdgeId e);

/// All multigraphs without isolated vertices having 1..max_edges edges, at most
/// max_vertices vertices and edge multiplicity at most max_multiplicity (0 for
/// unbounded), one per isomorphism class, ordered by edge count.
std::vector<Multigraph> enumerate_multigraphs(int max_vertices, int max_edges, int max_multiplicity);

struct NamedGraph {
  std::string name;
  Multigraph graph;
};

/// Members of the built-in families whose line graph is 3-connected and
/// essentially 9-connected, with at most max_edges edges; stops after `budget`
/// instances.
std::vector<NamedGraph> find_qualifying_instances(int budget, int max_edges = 30);

/// Uniform choice of m hyperedges over n vertices, each of size 3 with probability p3.
Hypergraph3 random_hypergraph(int n, int m, double p3, std::mt19937& rng);

/// Every 3-hypergraph on exactly n vertices with at most max_hyperedges
/// hyperedges (repetition allowed), one per isomorphism class.
std::vector<Hypergraph3> enumerate_hypergraphs(int n, int max_hyperedges);

}  // namespace lhc
