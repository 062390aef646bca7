#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lhc/multigraph.hpp"

namespace lhc {

/// The edge cut of a vertex subset: edges with exactly one endpoint on `side`.
struct EdgeCut {
  std::vector<VertexId> side;
  std::vector<EdgeId> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

EdgeCut boundary(const Multigraph& g, std::span<const VertexId> x);

/// True when G minus the boundary of x leaves at least two components that each
/// contain at least r edges.
bool is_r_essential_cut(const Multigraph& g, std::span<const VertexId> x, int r);

/// A minimum r-essential edge cut, or nullopt when none exists.
/// Exact for r <= 2 via max-flow between vertex-disjoint connected r-edge
/// subgraphs; for r >= 3 falls back to subset enumeration (|V| <= 22).
std::optional<EdgeCut> min_r_essential_cut(const Multigraph& g, int r);
CutSize r_essential_edge_connectivity(const Multigraph& g, int r);

/// Subset enumeration over all X subsets of V; throws GraphError when |V| > 22.
CutSize r_essential_edge_connectivity_exhaustive(const Multigraph& g, int r);

/// Minimum number of vertices whose removal leaves two nontrivial components.
CutSize essential_vertex_connectivity(const SimpleGraph& g);
/// Subset enumeration by increasing cut size; throws GraphError when |V| > 18.
CutSize essential_vertex_connectivity_exhaustive(const SimpleGraph& g);
/// Vertex set of a minimum essential vertex cut, if one exists.
std::optional<std::vector<VertexId>> min_essential_vertex_cut(const SimpleGraph& g);

bool is_essentially_k_connected(const SimpleGraph& g, int k);

/// Classical vertex connectivity; n-1 for complete graphs.
int vertex_connectivity(const SimpleGraph& g);

/// Throws GraphError("no edges") for an edgeless graph.
SimpleGraph line_graph(const Multigraph& g);

struct Obs2EssCheck {
  bool vertex_side = false;  // L(G) essentially k-connected
  bool edge_side = false;    // G 2-essentially k-edge-connected and |E(G)| > k
  bool agree() const { return vertex_side == edge_side; }
};
Obs2EssCheck evaluate_obs_2ess(const Multigraph& g, int k);
bool check_obs_2ess(const Multigraph& g, int k);

bool is_claw_free(const SimpleGraph& g);
/// Claw as (centre, a, b, c) when present.
std::optional<std::vector<VertexId>> find_claw(const SimpleGraph& g);

/// Adds every missing edge between two neighbours of x.
SimpleGraph local_completion(const SimpleGraph& g, VertexId x);

/// Applies local completions in order and reports whether essential
/// k-connectivity survived every step. Throws GraphError naming the failed
/// premise when g is not connected, claw-free and essentially k-connected.
bool check_lemma_ess(const SimpleGraph& g, std::span<const VertexId> completion_sequence, int k);

/// Connectivity data of G and of its line graph, derived from G alone.
struct LineProfile {
  int edges = 0;
  CutSize edge_connectivity;        // r = 0
  CutSize essential;                // r = 1
  CutSize two_essential;            // r = 2
  int line_connectivity = 0;        // kappa(L(G))
  int line_essential = 0;           // largest k with L(G) essentially k-connected
  bool qualifying = false;          // L(G) 3-connected and essentially 9-connected
};
LineProfile line_profile(const Multigraph& g);

}  // namespace lhc
