#pragma once

#include <vector>

#include "lhc/multigraph.hpp"

namespace lhc {

/// Vertex-coloured multigraph given by its multiplicity matrix.
struct ColoredMultigraph {
  int n = 0;
  std::vector<int> color;
  std::vector<int> mult;  // n*n, symmetric, zero diagonal

  explicit ColoredMultigraph(int size = 0)
      : n(size), color(static_cast<size_t>(size), 0), mult(static_cast<size_t>(size) * size, 0) {}
  static ColoredMultigraph from(const Multigraph& g);

  int at(int u, int v) const { return mult[static_cast<size_t>(u) * n + v]; }
  void add(int u, int v) {
    ++mult[static_cast<size_t>(u) * n + v];
    ++mult[static_cast<size_t>(v) * n + u];
  }
};

struct CanonicalForm {
  std::vector<int> certificate;  // equal iff the inputs are isomorphic (colour preserving)
  std::vector<int> position;     // position[v] = canonical index of v
};

/// Colour refinement plus individualisation with exhaustive branching.
/// Exact; cost grows with the automorphism group, fine for a few dozen vertices.
CanonicalForm canonical_form(const ColoredMultigraph& g);

/// Certificate of an uncoloured multigraph, built component by component.
std::vector<int> multigraph_certificate(const Multigraph& g);
bool isomorphic(const Multigraph& a, const Multigraph& b);

}  // namespace lhc
