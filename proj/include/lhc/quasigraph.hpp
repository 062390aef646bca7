#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lhc/hypergraph.hpp"

namespace lhc {

using VertexPair = std::pair<VertexId, VertexId>;  // first < second

/// Assigns each hyperedge of its host either a 2-subset or nothing.
class Quasigraph {
 public:
  Quasigraph() = default;
  explicit Quasigraph(Hypergraph3 host) : host_(std::move(host)) {}

  /// Throws GraphError unless {a,b} is a 2-subset of hyperedge e.
  void assign(HyperedgeId e, VertexId a, VertexId b);
  void clear(HyperedgeId e) { image_.erase(e); }

  const Hypergraph3& host() const { return host_; }
  std::optional<VertexPair> image(HyperedgeId e) const;
  bool used(HyperedgeId e) const { return image_.contains(e); }
  int num_used() const { return static_cast<int>(image_.size()); }
  const std::map<HyperedgeId, VertexPair>& assignment() const { return image_; }

 private:
  Hypergraph3 host_;
  std::map<HyperedgeId, VertexPair> image_;
};

struct PiStar {
  Multigraph graph;                     // on V(host)
  std::vector<HyperedgeId> edge_label;  // graph edge -> hyperedge
};
PiStar pi_star(const Quasigraph& q);

bool is_acyclic(const Quasigraph& q);
bool is_quasicycle(const Quasigraph& q);
/// No quasicycle exists; equivalent to G(H) being a forest.
bool hypergraph_is_acyclic(const Hypergraph3& h);

bool connected_on(const Quasigraph& q, std::span<const VertexId> x);

/// How an unused hyperedge is treated in the anticonnectedness test.
enum class EmptyImage { Contained, NotContained };

/// Searches for a nontrivial partition of x with no witnessing hyperedge; throws
/// GraphError("desk-scale bound exceeded") when |x| > max_size.
bool anticonnected_on(const Quasigraph& q, std::span<const VertexId> x, EmptyImage mode = EmptyImage::Contained,
                      int max_size = 12);

struct QuotientQuasigraph {
  QuotientResult quotient;
  Quasigraph quasigraph;  // lives on quotient.hypergraph
};
QuotientQuasigraph quotient_quasigraph(const Quasigraph& q, const Partition& p);

/// Unused hyperedges on the same vertex set, ids kept.
Hypergraph3 complement(const Quasigraph& q);

struct SkeletalCheck {
  bool classes_connected = true;
  bool classes_anticonnected = true;
  bool complement_acyclic = true;
  std::vector<std::string> transcript;
  bool ok() const { return classes_connected && classes_anticonnected && complement_acyclic; }
};
SkeletalCheck is_skeletal(const Quasigraph& q, const Partition& p, EmptyImage mode = EmptyImage::Contained);

struct RootedOrientation {
  std::vector<VertexId> roots;               // one per component of pi*, ascending
  std::vector<HyperedgeId> associated;       // vertex -> associated hyperedge, or -1
  std::map<HyperedgeId, VertexId> tail;      // used hyperedge -> its tail
  std::map<HyperedgeId, VertexId> head;      // used hyperedge -> its head
};
/// Throws GraphError when q is cyclic or the roots do not pick one vertex per component.
RootedOrientation rooted_orientation(const Quasigraph& q, std::span<const VertexId> roots);
/// Roots every component at its smallest vertex.
RootedOrientation default_orientation(const Quasigraph& q);

std::vector<VertexId> bad_leaves(const Quasigraph& q, const RootedOrientation& o);
/// True when some choice of roots creates a bad leaf.
bool has_bad_leaf_any_roots(const Quasigraph& q);

struct SkeletalWitness {
  Hypergraph3 related;
  std::vector<VertexId> switches;
  Quasigraph sigma;
  Partition partition;
  std::vector<std::string> transcript;
  long long nodes = 0;  // search nodes spent
};

struct SkeletalOptions {
  int switch_depth = 1;
  int min_classes = 1;
  int max_classes = -1;  // -1: no cap
  int max_vertices = 12;
  int max_hyperedges = 40;
  long long node_budget = 50'000'000;
  EmptyImage mode = EmptyImage::Contained;
};

class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Looks for a related hypergraph, an acyclic quasigraph without bad leaves under
/// any rooting, and a skeletal partition. Classes counts are tried in increasing
/// order; within one count, related hypergraphs in breadth-first order, then
/// partitions in restricted-growth order. Throws SearchExhausted when no witness
/// exists within the options, GraphError on bounds or budget.
SkeletalWitness skeletal_search(const Hypergraph3& h, const SkeletalOptions& options = {});

/// Re-verifies every claim of a witness from scratch.
bool verify_witness(const Hypergraph3& original, const SkeletalWitness& w, EmptyImage mode = EmptyImage::Contained);

}  // namespace lhc
