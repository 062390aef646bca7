#include "lhc/canon.hpp"

#include <algorithm>
#include <map>

namespace lhc {

ColoredMultigraph ColoredMultigraph::from(const Multigraph& g) {
  ColoredMultigraph c(g.num_vertices());
  for (const Edge& e : g.edges()) c.add(e.u, e.v);
  return c;
}

namespace {

// Refines `cells` (colour rank per vertex) to the coarsest equitable colouring.
// Ranks are assigned from isomorphism-invariant signatures, so the result is canonical.
void refine(const ColoredMultigraph& g, std::vector<int>& cells) {
  const int n = g.n;
  int classes = cells.empty() ? 0 : *std::max_element(cells.begin(), cells.end()) + 1;
  while (true) {
    std::vector<std::vector<int>> sig(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<std::pair<int, int>> nb;
      for (int w = 0; w < n; ++w) {
        if (g.at(v, w) > 0) nb.emplace_back(cells[w], g.at(v, w));
      }
      std::sort(nb.begin(), nb.end());
      sig[v].push_back(cells[v]);
      for (auto [c, m] : nb) {
        sig[v].push_back(c);
        sig[v].push_back(m);
      }
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      cells[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    }
    const int now = static_cast<int>(distinct.size());
    if (now == classes) return;
    classes = now;
  }
}

bool twins(const ColoredMultigraph& g, int u, int v) {
  for (int w = 0; w < g.n; ++w) {
    if (w == u || w == v) continue;
    if (g.at(u, w) != g.at(v, w)) return false;
  }
  return true;
}

struct Search {
  const ColoredMultigraph& g;
  std::vector<int> best;
  std::vector<int> best_position;

  std::vector<int> certificate_of(const std::vector<int>& cells) const {
    std::vector<int> order(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) order[cells[v]] = v;
    std::vector<int> cert;
    cert.reserve(static_cast<size_t>(g.n) * (g.n + 1) + 1);
    cert.push_back(g.n);
    for (int i = 0; i < g.n; ++i) cert.push_back(g.color[order[i]]);
    for (int i = 0; i < g.n; ++i) {
      for (int j = i + 1; j < g.n; ++j) cert.push_back(g.at(order[i], order[j]));
    }
    return cert;
  }

  void run(std::vector<int> cells) {
    refine(g, cells);
    const int n = g.n;
    std::vector<int> size(static_cast<size_t>(n), 0);
    for (int c : cells) ++size[c];
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target < 0) {
      auto cert = certificate_of(cells);
      if (best.empty() || cert < best) {
        best = std::move(cert);
        best_position = cells;
      }
      return;
    }
    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (cells[v] != target) continue;
      bool skip = false;
      for (int t : tried) {
        if (twins(g, t, v)) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      tried.push_back(v);
      std::vector<int> next(static_cast<size_t>(n));
      for (int w = 0; w < n; ++w) next[w] = 2 * cells[w] + ((cells[w] == target && w != v) ? 1 : 0);
      run(std::move(next));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const ColoredMultigraph& g) {
  if (g.n == 0) return {{0}, {}};
  // Initial ranks follow the sorted distinct input colours.
  std::vector<int> palette = g.color;
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  std::vector<int> cells(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) {
    cells[v] = static_cast<int>(std::lower_bound(palette.begin(), palette.end(), g.color[v]) - palette.begin());
  }
  Search s{g, {}, {}};
  s.run(std::move(cells));
  return {std::move(s.best), std::move(s.best_position)};
}

std::vector<int> multigraph_certificate(const Multigraph& g) {
  std::vector<std::vector<int>> parts;
  for (const auto& comp : components(g)) {
    Multigraph sub = induced_subgraph(g, comp);
    parts.push_back(canonical_form(ColoredMultigraph::from(sub)).certificate);
  }
  std::sort(parts.begin(), parts.end());
  std::vector<int> cert{static_cast<int>(parts.size())};
  for (const auto& p : parts) cert.insert(cert.end(), p.begin(), p.end());
  return cert;
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  return multigraph_certificate(a) == multigraph_certificate(b);
}

}  // namespace lhc
