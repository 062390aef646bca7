#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lhc/hypergraph.hpp"
#include "lhc/multigraph.hpp"

namespace lhc {

class ReductionError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// The G-edges and G-vertices a core edge stands for, walked from its first
/// core endpoint to its second (vertices include both endpoints).
struct CorePath {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;
};

enum class CorePolicy { Strict, Lenient };

struct CoreResult {
  Multigraph core;                         // dense ids
  std::vector<VertexId> core_to_graph;     // core vertex -> G vertex
  std::vector<VertexId> graph_to_core;     // G vertex -> core vertex or -1
  std::vector<CorePath> paths;             // core edge -> provenance
  std::vector<EdgeId> graph_edge_to_core;  // G edge -> core edge or -1 (k1)
  std::vector<VertexId> leaves;            // V1(G), G ids
  std::vector<VertexId> transient;         // G ids
  std::vector<VertexId> protected_vertices;  // core ids
  std::vector<EdgeId> discarded_loops;     // G edges lost to loops during suppression
  bool trivial = false;
  bool hypothesis_ok = true;               // connected and essentially 3-edge-connected
  std::vector<std::string> log;

  bool is_protected(VertexId core_vertex) const;
};

/// Deletes V1(G) once, then suppresses degree-2 vertices by ascending id,
/// contracting the lower-id incident edge and discarding loops. Strict policy
/// throws ReductionError naming the cut when G is disconnected or not
/// essentially 3-edge-connected; lenient policy records it in hypothesis_ok.
CoreResult compute_core(const Multigraph& g, CorePolicy policy = CorePolicy::Strict);

/// X+ in G for X given in core ids; result in G ids, sorted.
std::vector<VertexId> xcore(const Multigraph& g, const CoreResult& core, std::span<const VertexId> x);
/// d_{G0}(X) == d_G(X+), and r-essential cuts (r = 0,1,2) map to r-essential cuts.
bool check_obs_cuts(const Multigraph& g, const CoreResult& core, std::span<const VertexId> x);

struct CoreProperties {
  bool three_edge_connected = true;
  bool essentially_four = true;
  bool two_essentially_nine = true;
  bool all() const { return three_edge_connected && essentially_four && two_essentially_nine; }
};
CoreProperties check_core_properties(const CoreResult& core);

/// Greedy maximal independent set of unprotected degree-3 core vertices, scanned
/// in ascending id, or in a seeded random order when seed is given.
std::vector<VertexId> select_w(const CoreResult& core, std::optional<unsigned> seed = std::nullopt);

struct HyperReduction {
  Hypergraph3 h0;                             // vertex names are G ids
  std::vector<VertexId> w;                    // core ids, ascending
  std::map<VertexId, HyperedgeId> h_of;       // w -> h(w)
  std::vector<VertexId> permanent;            // core ids, ascending; h0 vertex i is permanent[i]
  std::vector<VertexId> core_to_h0;           // core vertex -> h0 vertex or -1
  std::vector<std::string> log;

  bool is_temporary(VertexId core_vertex) const;
};

/// Surviving core edges keep their core edge id; h(w) gets id |E(G0)| + w.
HyperReduction build_h0(const CoreResult& core, std::span<const VertexId> w);

/// Y+ in core ids for Y given in h0 ids.
std::vector<VertexId> xhyper(const CoreResult& core, const HyperReduction& red, std::span<const VertexId> y);
bool check_xhyper_degree(const CoreResult& core, const HyperReduction& red, std::span<const VertexId> y);

std::optional<EdgeId> k1_map(const CoreResult& core, EdgeId e);
std::optional<HyperedgeId> k2_map(const CoreResult& core, const HyperReduction& red, EdgeId core_edge);
std::optional<HyperedgeId> k_map(const Multigraph& g, const CoreResult& core, const HyperReduction& red, EdgeId e);

/// Every edge of G has an endvertex that survives into H0.
bool check_lemma_permanent(const Multigraph& g, const CoreResult& core, const HyperReduction& red);

struct AnchoredHypergraph {
  Hypergraph3 he;
  EdgeId e1 = -1, e2 = -1;
  HyperedgeId k1 = -1, k2 = -1;
  VertexId a1 = -1, a2 = -1;  // h0 / he vertex ids
  bool second_detach_skipped = false;
  std::vector<std::string> log;
};

/// Permanent endvertices of e lying in k(e), as h0 ids in ascending G id order.
std::vector<VertexId> anchor_candidates(const Multigraph& g, const CoreResult& core, const HyperReduction& red,
                                        EdgeId e);

/// Throws ReductionError("edge collapses under reduction") when k(e_i) is empty.
AnchoredHypergraph build_he(const Multigraph& g, const CoreResult& core, const HyperReduction& red, EdgeId e1, EdgeId e2);

/// The whole reduction for one instance.
struct Reduction {
  CoreResult core;
  HyperReduction hyper;
};
Reduction reduce(const Multigraph& g, CorePolicy policy = CorePolicy::Strict, std::optional<unsigned> seed = std::nullopt);

}  // namespace lhc
