#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhc {

using VertexId = int;
using EdgeId = int;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool has(VertexId x) const { return x == u || x == v; }
};

/// Loopless multigraph with dense vertex ids 0..n-1 and dense edge ids 0..m-1.
/// Incidence lists are kept in ascending edge id order.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int num_vertices);

  static Multigraph from_edges(int num_vertices, std::span<const Edge> edges);

  VertexId add_vertex();
  /// Throws GraphError on a loop or an unknown endpoint.
  EdgeId add_edge(VertexId u, VertexId v);

  int num_vertices() const { return static_cast<int>(incidence_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool has_vertex(VertexId v) const { return v >= 0 && v < num_vertices(); }
  bool has_edge(EdgeId e) const { return e >= 0 && e < num_edges(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(incidence_.at(v).size()); }

  /// Distinct neighbours in ascending order.
  std::vector<VertexId> neighbours(VertexId v) const;
  int multiplicity(VertexId u, VertexId v) const;
  bool is_simple() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Loopless graph without parallel edges, backed by an adjacency matrix.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int num_vertices);

  /// Throws GraphError if g has parallel edges.
  static SimpleGraph from_multigraph(const Multigraph& g);

  /// Returns false when the edge is already present.
  bool add_edge(VertexId u, VertexId v);

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }
  bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }
  bool adjacent(VertexId u, VertexId v) const { return adj_[static_cast<size_t>(u) * n_ + v] != 0; }
  const std::vector<VertexId>& neighbours(VertexId v) const { return nbrs_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(nbrs_.at(v).size()); }

  std::vector<Edge> edges() const;
  Multigraph to_multigraph() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<char> adj_;
  std::vector<std::vector<VertexId>> nbrs_;
};

/// A cut value that may be infinite ("no such cut exists").
class CutSize {
 public:
  constexpr CutSize() = default;
  constexpr explicit CutSize(int value) : value_(value), finite_(true) {}
  static constexpr CutSize infinite() { return CutSize{}; }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_infinite() const { return !finite_; }
  int value() const {
    if (!finite_) throw GraphError("infinite cut size has no value");
    return value_;
  }

  friend constexpr bool operator==(CutSize a, CutSize b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(CutSize a, CutSize b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }
  /// Compares against a plain count; infinity dominates every count.
  constexpr bool at_least(int k) const { return !finite_ || value_ >= k; }

  std::string to_string() const { return finite_ ? std::to_string(value_) : std::string("inf"); }

 private:
  int value_ = 0;
  bool finite_ = false;
};

/// Membership vector for a vertex subset; throws GraphError on ids outside [0, n).
std::vector<char> membership(int n, std::span<const VertexId> subset);

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<VertexId>> components(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Subgraph induced by `keep` (sorted); vertex i of the result is keep[i].
Multigraph induced_subgraph(const Multigraph& g, std::span<const VertexId> keep);

}  // namespace lhc
