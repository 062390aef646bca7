#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lhc/connectivity.hpp"
#include "lhc/generators.hpp"
#include "lhc/reduction.hpp"
#include "oracles.hpp"

using namespace lhc;

namespace {

EdgeId edge_between(const Multigraph& g, VertexId u, VertexId v) {
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (g.edge(e).has(u) && g.edge(e).has(v)) return e;
  FAIL("no such edge");
  return -1;
}

std::vector<VertexId> sorted_vertices(const Hyperedge& e, const Hypergraph3& h) {
  std::vector<VertexId> names;
  for (VertexId v : e.vertices) names.push_back(std::stoi(h.name(v)));
  std::sort(names.begin(), names.end());
  return names;
}

/// d_G(X+) computed directly on G.
int graph_boundary(const Multigraph& g, const std::vector<VertexId>& x) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : x) in[v] = 1;
  int d = 0;
  for (const auto& e : g.edges()) d += in[e.u] != in[e.v];
  return d;
}

}  // namespace

TEST_CASE("cores of small graphs") {
  auto star = compute_core(complete_bipartite(1, 4));
  CHECK(star.trivial);
  CHECK(star.core.num_vertices() == 1);

  auto k4 = complete_graph(4);
  auto pendant = k4;
  pendant.add_edge(0, pendant.add_vertex());
  auto c1 = compute_core(pendant);
  CHECK(oracle::isomorphic(c1.core, k4));
  CHECK(c1.leaves == std::vector<VertexId>{4});

  auto sub = subdivide(k4, 0);
  auto c2 = compute_core(sub);
  CHECK(oracle::isomorphic(c2.core, k4));
  CHECK(c2.transient == std::vector<VertexId>{4});
  REQUIRE(c2.paths.size() == 6);
  int long_paths = 0;
  for (const auto& p : c2.paths) long_paths += p.edges.size() == 2;
  CHECK(long_paths == 1);

  // transient neighbour makes the core vertex protected
  CHECK(c2.protected_vertices.size() == 2);

  auto p4 = Multigraph(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  // P4 is not essentially 3-edge-connected
  CHECK_THROWS_AS(compute_core(p4), ReductionError);
  auto lenient = compute_core(p4, CorePolicy::Lenient);
  CHECK_FALSE(lenient.hypothesis_ok);
}

TEST_CASE("pendant generator") {
  auto k4 = complete_graph(4);
  auto g = gen_pendant(k4);
  CHECK(g.num_vertices() == 8);
  CHECK(g.num_edges() == 10);
  CHECK(r_essential_edge_connectivity(g, 1).at_least(3));
  auto core = compute_core(g);
  CHECK(oracle::isomorphic(core.core, k4));
  auto k2 = gen_pendant(Multigraph(1));
  CHECK(k2.num_vertices() == 2);
  CHECK(k2.num_edges() == 1);
}

TEST_CASE("xcore") {
  auto g = complete_graph(4);
  g.add_edge(0, g.add_vertex());
  auto core = compute_core(g);
  std::vector<VertexId> all{0, 1, 2, 3};
  CHECK(xcore(g, core, all) == std::vector<VertexId>{0, 1, 2, 3, 4});
  std::vector<VertexId> none;
  CHECK(xcore(g, core, none).empty());
  std::vector<VertexId> v{core.graph_to_core[0]};
  CHECK(xcore(g, core, v) == std::vector<VertexId>{0, 4});
}

TEST_CASE("cut degrees survive the core, exhaustively") {
  std::vector<Multigraph> instances{subdivide(complete_graph(4), 0), gen_pendant(complete_graph(4)),
                                    subdivide(subdivide(multiply_edges(complete_graph(4), 2), 3), 7),
                                    protected_hat(multiply_edges(complete_graph(5), 2), {0, 1, 2})};
  for (const auto& g : instances) {
    auto core = compute_core(g);
    int n = core.core.num_vertices();
    REQUIRE(n <= 10);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<VertexId> x;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) x.push_back(v);
      CHECK(check_obs_cuts(g, core, x));
      std::vector<char> in(n, 0);
      for (int v : x) in[v] = 1;
      int dc = 0;
      for (const auto& e : core.core.edges()) dc += in[e.u] != in[e.v];
      CHECK(dc == graph_boundary(g, xcore(g, core, x)));
    }
  }
}

TEST_CASE("core properties") {
  auto g = multiply_edges(complete_graph(5), 2);
  CHECK(check_core_properties(compute_core(g)).all());
  auto trivial = compute_core(complete_bipartite(1, 3));
  CHECK(check_core_properties(trivial).all());
}

TEST_CASE("select W") {
  auto c4 = compute_core(multiply_edges(Multigraph::from_edges(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 2));
  CHECK(select_w(c4).empty());
  auto k4 = compute_core(complete_graph(4));
  CHECK(select_w(k4) == std::vector<VertexId>{0});
  for (unsigned seed = 0; seed < 10; ++seed) {
    auto w = select_w(k4, seed);
    CHECK(w.size() == 1);
  }
  // independence and maximality on a larger cubic graph
  auto prism = Multigraph::from_edges(
      6, std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  auto core = compute_core(prism);
  auto w = select_w(core);
  std::vector<char> in(6, 0);
  for (int v : w) in[v] = 1;
  for (const auto& e : core.core.edges()) CHECK_FALSE((in[e.u] && in[e.v]));
  for (int v = 0; v < 6; ++v) {
    if (in[v] || core.is_protected(v)) continue;
    bool blocked = false;
    for (int u : core.core.neighbours(v)) blocked = blocked || in[u];
    CHECK(blocked);
  }
  CHECK(w.front() == 0);
}

TEST_CASE("H0 construction") {
  auto g = complete_graph(4);
  auto core = compute_core(g);
  std::vector<VertexId> w{0};
  auto red = build_h0(core, w);
  CHECK(red.h0.num_vertices() == 3);
  CHECK(red.h0.count_of_size(2) == 3);
  CHECK(red.h0.count_of_size(3) == 1);
  HyperedgeId hw = red.h_of.at(0);
  CHECK(hw == core.core.num_edges() + 0);
  CHECK(sorted_vertices(red.h0.hyperedge(hw), red.h0) == std::vector<VertexId>{1, 2, 3});

  auto plain = build_h0(core, std::vector<VertexId>{});
  CHECK(plain.h0.num_hyperedges() == 6);
  CHECK(plain.h0.count_of_size(3) == 0);

  // w with exactly two distinct neighbours through parallel edges
  auto dbl = Multigraph::from_edges(3, std::vector<Edge>{{0, 1}, {0, 1}, {0, 2}, {1, 2}, {1, 2}, {2, 0}});
  auto dcore = compute_core(dbl, CorePolicy::Lenient);
  std::vector<VertexId> w0{0};
  auto dred = build_h0(dcore, w0);
  CHECK(dred.h0.hyperedge(dred.h_of.at(0)).size() == 2);
}

TEST_CASE("xhyper") {
  auto core = compute_core(complete_graph(4));
  std::vector<VertexId> w{0};
  auto red = build_h0(core, w);
  std::vector<VertexId> all{0, 1, 2};
  CHECK(xhyper(core, red, all) == std::vector<VertexId>{0, 1, 2, 3});
  std::vector<VertexId> bc{0, 1};  // h0 ids of G vertices 1 and 2
  CHECK(xhyper(core, red, bc) == std::vector<VertexId>{0, 1, 2});
  std::vector<VertexId> none;
  CHECK(xhyper(core, red, none).empty());
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<VertexId> y;
    for (int v = 0; v < 3; ++v)
      if ((mask >> v) & 1u) y.push_back(v);
    CHECK(check_xhyper_degree(core, red, y));
  }
}

TEST_CASE("edge maps k1 k2 k") {
  auto base = complete_graph(4);
  auto g = subdivide(base, 5);  // edge 23 becomes 2-4-3
  g.add_edge(1, g.add_vertex());  // pendant at 1
  auto r = reduce(g);
  EdgeId pend = g.num_edges() - 1;
  CHECK_FALSE(k1_map(r.core, pend).has_value());
  CHECK_FALSE(k_map(g, r.core, r.hyper, pend).has_value());
  // both halves of the subdivided edge map to the same core edge
  EdgeId half_a = edge_between(g, 2, 4), half_b = edge_between(g, 3, 4);
  CHECK(k1_map(r.core, half_a) == k1_map(r.core, half_b));
  REQUIRE(k1_map(r.core, half_a).has_value());

  auto k4 = complete_graph(4);
  auto rk = reduce(k4);
  REQUIRE(rk.hyper.w == std::vector<VertexId>{0});
  CHECK(k_map(k4, rk.core, rk.hyper, edge_between(k4, 0, 1)) == rk.hyper.h_of.at(0));
  CHECK(check_lemma_permanent(k4, rk.core, rk.hyper));
}

TEST_CASE("lemma permanent on qualifying instances") {
  for (const auto& inst : find_qualifying_instances(8)) {
    auto r = reduce(inst.graph);
    CHECK(check_lemma_permanent(inst.graph, r.core, r.hyper));
    CHECK(check_core_properties(r.core).all());
  }
}

TEST_CASE("anchored hypergraph") {
  auto k4 = complete_graph(4);
  auto r = reduce(k4);
  EdgeId e01 = edge_between(k4, 0, 1), e23 = edge_between(k4, 2, 3), e02 = edge_between(k4, 0, 2);
  HyperedgeId hw = r.hyper.h_of.at(0);

  auto a = build_he(k4, r.core, r.hyper, e01, e23);
  CHECK(a.k1 == hw);
  CHECK(a.he.hyperedge(hw).size() == 2);
  CHECK_FALSE(a.he.hyperedge(hw).contains(a.a1));
  CHECK_FALSE(a.he.has_hyperedge(a.k2));

  auto same = build_he(k4, r.core, r.hyper, e01, e02);
  CHECK(same.k1 == same.k2);
  CHECK(same.a1 != same.a2);
  CHECK_FALSE(same.he.has_hyperedge(hw));

  auto pend = k4;
  pend.add_edge(0, pend.add_vertex());
  auto rp = reduce(pend);
  CHECK_THROWS_WITH_AS(build_he(pend, rp.core, rp.hyper, pend.num_edges() - 1, e23),
                       doctest::Contains("edge collapses under reduction"), ReductionError);
  auto cands = anchor_candidates(k4, r.core, r.hyper, e01);
  CHECK(cands.size() == 1);
}
