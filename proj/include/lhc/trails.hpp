#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lhc/hypergraph.hpp"
#include "lhc/multigraph.hpp"
#include "lhc/quasigraph.hpp"
#include "lhc/reduction.hpp"

namespace lhc {

/// v0 f1 v1 ... fl vl with no repeated edge; vertices.size() == edges.size() + 1.
struct Trail {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  VertexId start() const { return vertices.front(); }
  VertexId end() const { return vertices.back(); }
  int length() const { return static_cast<int>(edges.size()); }
};

bool is_valid_trail(const Multigraph& g, const Trail& t);
/// Every edge of g has an endvertex at an interior position of t.
bool is_internally_dominating(const Trail& t, const Multigraph& g);
/// Every vertex of g occurs at an interior position of t.
bool is_internally_spanning(const Trail& t, const Multigraph& g);

struct TrailConstraints {
  std::optional<EdgeId> first_edge;
  std::optional<EdgeId> last_edge;
  std::vector<VertexId> must_span;
  bool internally_dominating = false;
  bool internally_spanning = false;
  bool best_effort = false;         // allow more than max_edges (up to 64)
  int max_edges = 30;
  long long node_budget = 20'000'000;
};

/// Depth-first search over trails from a to b, edges tried in ascending id,
/// with memoised dead states. Returns the first trail found or nullopt.
/// Throws GraphError when the graph exceeds the regime or the budget runs out.
std::optional<Trail> find_trail(const Multigraph& g, VertexId a, VertexId b, const TrailConstraints& c = {});

/// Internally dominating trail whose first edge is e1 and last edge is e2 (e1 != e2).
std::optional<Trail> dominating_trail(const Multigraph& g, EdgeId e1, EdgeId e2, int max_edges = 30);

/// Exact bitmask dynamic program, |V| <= 24.
bool ham_path_exists(const SimpleGraph& g, std::optional<VertexId> a = std::nullopt, std::optional<VertexId> b = std::nullopt);
bool ham_connected(const SimpleGraph& g);

struct PreimageCheck {
  bool line_ham_connected = false;
  bool all_pairs_have_trails = false;
  std::optional<std::pair<EdgeId, EdgeId>> failing_pair;
  bool agree() const { return line_ham_connected == all_pairs_have_trails; }
};
/// Both sides of the trail characterisation of Hamilton-connected line graphs.
PreimageCheck crosscheck_preimage(const Multigraph& g);

using SpanningTreePair = std::pair<std::vector<EdgeId>, std::vector<EdgeId>>;
/// Matroid partition with shortest augmenting paths over two graphic matroids.
std::optional<SpanningTreePair> two_disjoint_spanning_trees(const Multigraph& g);
bool is_spanning_tree(const Multigraph& g, const std::vector<EdgeId>& edges);

struct NashWilliamsResult {
  Partition worst;
  int slack = 0;     // crossing edges - 2(|P|-1) at the worst partition
  bool verdict = false;
};
/// Minimum over all partitions of V (|V| <= 12).
NashWilliamsResult nash_williams_check(const Multigraph& g);

/// ceil(3p/2) >= 2(p-1).
bool lemma_small_bound(int p);
struct LemmaSmallResult {
  bool applicable = false;  // 3-edge-connected with at most 5 vertices
  bool bound_holds = false;
  std::optional<SpanningTreePair> trees;
  bool ok() const { return !applicable || (bound_holds && trees.has_value()); }
};
LemmaSmallResult check_lemma_small(const Multigraph& core);

/// b1b2-trail in G(h) spanning V(h). The witness must be acyclic, connected and
/// anticonnected on V(h); a failed search throws SearchExhausted.
Trail qt_join(const Hypergraph3& h, VertexId b1, VertexId b2, const Quasigraph& witness, int max_edges = 40);

/// Turns an a1a2-trail of G(He) spanning V(He) into an internally dominating
/// (e1,e2)-trail of G. Throws GraphError if the input does not span or the
/// result fails verification.
Trail lift_trail(const Trail& te, const Multigraph& g, const CoreResult& core, const HyperReduction& red,
                 const AnchoredHypergraph& anchored);

}  // namespace lhc
