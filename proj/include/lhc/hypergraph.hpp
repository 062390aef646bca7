#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lhc/multigraph.hpp"

namespace lhc {

using HyperedgeId = int;

struct Hyperedge {
  HyperedgeId id = 0;
  std::vector<VertexId> vertices;  // sorted, 2 or 3 distinct entries

  int size() const { return static_cast<int>(vertices.size()); }
  bool contains(VertexId v) const;
};

/// Hypergraph whose hyperedges have 2 or 3 vertices. Hyperedge ids are stable
/// across edits; hyperedges() is always ordered by id.
class Hypergraph3 {
 public:
  Hypergraph3() = default;
  explicit Hypergraph3(int num_vertices);

  VertexId add_vertex(std::string name = {});
  /// Picks the next unused id. Throws GraphError on a bad size, repeated or unknown vertex.
  HyperedgeId add_hyperedge(std::span<const VertexId> vertices);
  HyperedgeId add_hyperedge(std::initializer_list<VertexId> vertices);
  void add_hyperedge_with_id(HyperedgeId id, std::span<const VertexId> vertices);
  void remove_hyperedge(HyperedgeId id);
  void replace_hyperedge(HyperedgeId id, std::span<const VertexId> vertices);

  int num_vertices() const { return n_; }
  int num_hyperedges() const { return static_cast<int>(edges_.size()); }
  bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }
  bool has_hyperedge(HyperedgeId id) const { return find(id) != nullptr; }
  const Hyperedge* find(HyperedgeId id) const;
  const Hyperedge& hyperedge(HyperedgeId id) const;
  const std::vector<Hyperedge>& hyperedges() const { return edges_; }
  int count_of_size(int k) const;

  std::vector<HyperedgeId> incident(VertexId v) const;
  int degree(VertexId v) const;

  const std::string& name(VertexId v) const { return names_.at(v); }
  void set_name(VertexId v, std::string name) { names_.at(v) = std::move(name); }

 private:
  void check(std::span<const VertexId> vertices) const;

  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<Hyperedge> edges_;
  HyperedgeId next_id_ = 0;
};

/// Partition of {0..n-1}. Classes are sorted internally and ordered by their smallest vertex.
class Partition {
 public:
  Partition() = default;
  /// Throws GraphError unless the classes are nonempty, disjoint and cover 0..n-1.
  Partition(int ground_size, std::vector<std::vector<VertexId>> classes);
  static Partition singletons(int n);
  static Partition whole(int n);
  /// labels[v] = arbitrary class label.
  static Partition from_labels(std::span<const int> labels);

  int ground_size() const { return static_cast<int>(class_of_.size()); }
  int size() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<VertexId>>& classes() const { return classes_; }
  const std::vector<VertexId>& operator[](int i) const { return classes_.at(i); }
  int class_of(VertexId v) const { return class_of_.at(v); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<VertexId>> classes_;
  std::vector<int> class_of_;
};

/// G(H): vertices of H first (same ids), then one node per 3-hyperedge in id order.
struct IncidenceGraph {
  Multigraph graph;
  std::vector<HyperedgeId> edge_source;        // graph edge -> hyperedge it comes from
  std::vector<HyperedgeId> node_hyperedge;     // graph node -> 3-hyperedge id, or -1
  std::map<HyperedgeId, VertexId> hyperedge_node;
};
IncidenceGraph incidence_graph(const Hypergraph3& h);

/// Hyperedges meeting x without being contained in it.
std::vector<HyperedgeId> boundary_h(const Hypergraph3& h, std::span<const VertexId> x);
int degree_of_set(const Hypergraph3& h, std::span<const VertexId> x);

/// Removes v from e; a 2-hyperedge disappears, a 3-hyperedge keeps its id.
Hypergraph3 detach(const Hypergraph3& h, HyperedgeId e, VertexId v);

struct QuotientResult {
  Hypergraph3 hypergraph;                      // vertex i is class i
  std::map<HyperedgeId, HyperedgeId> origin;   // quotient id -> original id (ids are inherited)
};
/// Only crossing hyperedges survive; distinct hyperedges with equal images stay distinct.
QuotientResult quotient(const Hypergraph3& h, const Partition& p);

bool switchable_at(const Hypergraph3& h, VertexId u);
/// {u,x},{u,y},{u,a,b} become {u,a},{u,b},{u,x,y}, keeping the three ids in that order
/// (the 2-hyperedges are taken by ascending id). Throws GraphError("switch precondition").
Hypergraph3 switch_at(const Hypergraph3& h, VertexId u);

/// Isomorphism certificate of the vertex-coloured incidence graph.
std::vector<int> hypergraph_certificate(const Hypergraph3& h);
bool hypergraphs_isomorphic(const Hypergraph3& a, const Hypergraph3& b);

struct RelatedHypergraph {
  Hypergraph3 hypergraph;
  std::vector<VertexId> switches;  // applied in order, vertex ids are shared with the source
};
/// Breadth-first over switch sequences, one representative per isomorphism class,
/// starting with h itself.
std::vector<RelatedHypergraph> related_hypergraphs(const Hypergraph3& h, int max_depth);
std::optional<std::vector<VertexId>> related_search(const Hypergraph3& h1, const Hypergraph3& h2, int max_depth);

/// Minimum d_H(X) over nonempty proper X by subset enumeration (|V| <= 24).
int hyper_edge_connectivity(const Hypergraph3& h);

/// Text format: lines "[id:] a b [c]"; a line with one name declares a vertex.
/// "# vertices a b ..." fixes the vertex order. Other '#' lines are comments.
Hypergraph3 read_hypergraph(std::istream& in);
Hypergraph3 read_hypergraph_string(std::string_view text);
std::string write_hypergraph(const Hypergraph3& h);

}  // namespace lhc
