#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "lhc/canon.hpp"
#include "lhc/connectivity.hpp"
#include "lhc/generators.hpp"
#include "lhc/io.hpp"
#include "oracles.hpp"

using namespace lhc;

namespace {

Multigraph path_graph(int n) {
  Multigraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Multigraph cycle_graph(int n) {
  Multigraph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Multigraph random_multigraph(int n, int m, std::mt19937& rng) {
  Multigraph g(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (g.num_edges() < m) {
    int u = pick(rng), v = pick(rng);
    if (u != v) g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST_CASE("multigraph basics") {
  Multigraph g(3);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.degree(1) == 3);
  CHECK(g.neighbours(1) == std::vector<VertexId>{0, 2});
  CHECK_FALSE(g.is_simple());
  CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 7), GraphError);
  CHECK_THROWS_AS(SimpleGraph::from_multigraph(g), GraphError);
  auto incident = g.incident(1);
  CHECK(std::is_sorted(incident.begin(), incident.end()));
}

TEST_CASE("components and induced subgraphs") {
  Multigraph g(5);
  g.add_edge(0, 1);
  g.add_edge(3, 4);
  auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<VertexId>{0, 1});
  CHECK(comps[1] == std::vector<VertexId>{2});
  CHECK_FALSE(is_connected(g));
  std::vector<VertexId> keep{3, 4};
  auto sub = induced_subgraph(g, keep);
  CHECK(sub.num_vertices() == 2);
  CHECK(sub.num_edges() == 1);
  std::vector<VertexId> bad{9};
  CHECK_THROWS_AS(membership(5, bad), GraphError);
}

TEST_CASE("line graphs") {
  auto c3 = line_graph(cycle_graph(3));
  CHECK(c3.num_vertices() == 3);
  CHECK(c3.num_edges() == 3);
  auto star = line_graph(complete_bipartite(1, 3));
  CHECK(star.num_edges() == 3);
  Multigraph dbl(2);
  dbl.add_edge(0, 1);
  dbl.add_edge(0, 1);
  auto k2 = line_graph(dbl);
  CHECK(k2.num_vertices() == 2);
  CHECK(k2.num_edges() == 1);
  CHECK_THROWS_WITH_AS(line_graph(Multigraph(3)), "no edges", GraphError);
}

TEST_CASE("edge cuts") {
  auto c4 = cycle_graph(4);
  std::vector<VertexId> x{0, 1};
  auto cut = boundary(c4, x);
  CHECK(cut.size() == 2);
  std::vector<VertexId> all{0, 1, 2, 3};
  CHECK(boundary(c4, all).size() == 0);
  std::vector<VertexId> a{0};
  CHECK(boundary(complete_graph(4), a).size() == 3);
  std::vector<VertexId> bad{5};
  CHECK_THROWS_AS(boundary(c4, bad), GraphError);
}

TEST_CASE("r-essential edge connectivity on small examples") {
  auto p4 = path_graph(4);
  CHECK(r_essential_edge_connectivity(p4, 1) == CutSize(1));
  CHECK(r_essential_edge_connectivity(p4, 2).is_infinite());
  CHECK(r_essential_edge_connectivity(cycle_graph(6), 2) == CutSize(2));
  auto k4 = complete_graph(4);
  CHECK(r_essential_edge_connectivity(k4, 1) == CutSize(4));
  CHECK(r_essential_edge_connectivity(k4, 2).is_infinite());
  auto cut = min_r_essential_cut(cycle_graph(6), 2);
  REQUIRE(cut.has_value());
  CHECK(is_r_essential_cut(cycle_graph(6), cut->side, 2));
}

TEST_CASE("r-essential connectivity matches the subset oracle on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    int m = n - 1 + static_cast<int>(rng() % 7);
    auto g = random_multigraph(n, std::min(m, 14), rng);
    for (int r = 0; r <= 3; ++r) {
      int expect = oracle::r_essential_edge_cut(g, r);
      auto got = r_essential_edge_connectivity(g, r);
      CAPTURE(write_edgelist_string(g));
      CAPTURE(r);
      if (expect < 0) {
        CHECK(got.is_infinite());
      } else {
        CHECK(got == CutSize(expect));
      }
      CHECK(r_essential_edge_connectivity_exhaustive(g, r) == got);
    }
  }
}

TEST_CASE("essential vertex connectivity") {
  auto k5 = SimpleGraph::from_multigraph(complete_graph(5));
  CHECK(is_essentially_k_connected(k5, 4));
  Multigraph bow(5);
  bow.add_edge(0, 1);
  bow.add_edge(1, 2);
  bow.add_edge(2, 0);
  bow.add_edge(2, 3);
  bow.add_edge(3, 4);
  bow.add_edge(4, 2);
  CHECK_FALSE(is_essentially_k_connected(SimpleGraph::from_multigraph(bow), 2));
  auto p5 = SimpleGraph::from_multigraph(path_graph(5));
  CHECK(essential_vertex_connectivity(p5) == CutSize(1));
  CHECK(is_essentially_k_connected(p5, 1));
  CHECK_FALSE(is_essentially_k_connected(p5, 2));

  std::mt19937 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    SimpleGraph s(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) s.add_edge(u, v);
    int expect = oracle::essential_vertex_cut(s);
    auto got = essential_vertex_connectivity(s);
    if (expect < 0) {
      CHECK(got.is_infinite());
    } else {
      CHECK(got == CutSize(expect));
      auto x = min_essential_vertex_cut(s);
      REQUIRE(x.has_value());
      CHECK(static_cast<int>(x->size()) == expect);
    }
    CHECK(essential_vertex_connectivity_exhaustive(s) == got);
  }
}

TEST_CASE("obs 2-ess on small examples") {
  CHECK(evaluate_obs_2ess(complete_graph(4), 3).agree());
  CHECK(evaluate_obs_2ess(path_graph(4), 1).agree());
  CHECK(check_obs_2ess(cycle_graph(6), 2));
}

TEST_CASE("claws and local completion") {
  CHECK(is_claw_free(line_graph(gen_pendant(complete_graph(4)))));
  auto k13 = SimpleGraph::from_multigraph(complete_bipartite(1, 3));
  CHECK_FALSE(is_claw_free(k13));
  auto claw = find_claw(k13);
  REQUIRE(claw.has_value());
  CHECK(claw->front() == 0);
  CHECK(is_claw_free(SimpleGraph::from_multigraph(cycle_graph(5))));

  auto filled = local_completion(k13, 0);
  CHECK(filled.num_edges() == 6);
  auto k4 = SimpleGraph::from_multigraph(complete_graph(4));
  CHECK(local_completion(k4, 2).num_edges() == 6);
  auto p3 = SimpleGraph::from_multigraph(path_graph(3));
  CHECK(local_completion(p3, 1).num_edges() == 3);
  CHECK_THROWS_AS(local_completion(p3, 5), GraphError);
}

TEST_CASE("lemma ess on claw-free graphs") {
  auto c5 = SimpleGraph::from_multigraph(cycle_graph(5));
  std::vector<VertexId> none;
  CHECK(check_lemma_ess(c5, none, 2));
  auto lk4 = line_graph(complete_graph(4));
  std::vector<VertexId> one{0};
  CHECK(check_lemma_ess(lk4, one, 2));
  auto k13 = SimpleGraph::from_multigraph(complete_bipartite(1, 3));
  CHECK_THROWS_AS(check_lemma_ess(k13, none, 1), GraphError);

  std::mt19937 rng(3);
  auto graphs = enumerate_multigraphs(5, 6, 2);
  int runs = 0;
  for (const auto& g : graphs) {
    if (!is_connected(g) || g.num_edges() < 3) continue;
    auto l = line_graph(g);
    auto ess = essential_vertex_connectivity(l);
    int k = ess.is_infinite() ? 2 : std::min(ess.value(), 2);
    if (k < 1) continue;
    std::vector<VertexId> seq;
    for (int i = 0; i < 3; ++i) seq.push_back(static_cast<int>(rng() % l.num_vertices()));
    CHECK(check_lemma_ess(l, seq, k));
    ++runs;
  }
  CHECK(runs > 20);
}

TEST_CASE("line profile") {
  auto p = line_profile(complete_graph(4));
  CHECK(p.edges == 6);
  CHECK(p.line_connectivity == 4);
  CHECK_FALSE(p.qualifying);
  auto k5 = multiply_edges(complete_graph(5), 2);
  auto q = line_profile(k5);
  CHECK(q.qualifying);
  CHECK(q.line_essential >= 9);
}

TEST_CASE("io round trips") {
  std::mt19937 rng(5);
  for (int i = 0; i < 60; ++i) {
    auto g = random_multigraph(3 + i % 6, 2 + i % 9, rng);
    auto back = read_sparse6(write_sparse6(g));
    CHECK(oracle::isomorphic(g, back));
    CHECK(multigraph_certificate(g) == multigraph_certificate(back));
    auto el = read_edgelist_string(write_edgelist_string(g));
    CHECK(el.num_edges() == g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
      CHECK(el.edge(e).u == g.edge(e).u);
      CHECK(el.edge(e).v == g.edge(e).v);
    }
  }
  auto petersen = read_graph6("IheA@GUAo");
  CHECK(petersen.num_vertices() == 10);
  CHECK(petersen.num_edges() == 15);
  CHECK(write_graph6(petersen) == "IheA@GUAo");
  CHECK_THROWS_AS(write_graph6(multiply_edges(complete_graph(3), 2)), FormatError);
  CHECK_THROWS_AS(read_graph6("\x01"), FormatError);
  CHECK_THROWS_AS(read_graph("abc", "dot"), FormatError);
  auto fixed = read_edgelist_string("# vertices 5\n0 1\n0 1\n");
  CHECK(fixed.num_vertices() == 5);
  CHECK(fixed.multiplicity(0, 1) == 2);
}

TEST_CASE("canonical certificates agree with the permutation oracle") {
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    int n = 3 + static_cast<int>(rng() % 4);
    auto a = random_multigraph(n, 3 + static_cast<int>(rng() % 6), rng);
    auto b = random_multigraph(n, a.num_edges(), rng);
    CHECK(isomorphic(a, b) == oracle::isomorphic(a, b));
    // a relabelled copy is always isomorphic
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Multigraph c(n);
    for (const auto& e : a.edges()) c.add_edge(perm[e.u], perm[e.v]);
    CHECK(multigraph_certificate(a) == multigraph_certificate(c));
  }
}
