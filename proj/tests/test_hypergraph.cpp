#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lhc/generators.hpp"
#include "lhc/hypergraph.hpp"
#include "oracles.hpp"

using namespace lhc;

namespace {

std::vector<int> degree_sequence(const Hypergraph3& h) {
  std::vector<int> d;
  for (int v = 0; v < h.num_vertices(); ++v) d.push_back(h.degree(v));
  return d;
}

/// Minimal switchable configuration: u=0, x=1, y=2, a=3, b=4.
Hypergraph3 switch_gadget() {
  Hypergraph3 h(5);
  h.add_hyperedge({0, 1});
  h.add_hyperedge({0, 2});
  h.add_hyperedge({0, 3, 4});
  return h;
}

int brute_d(const Hypergraph3& h, unsigned mask) {
  int d = 0;
  for (const auto& e : h.hyperedges()) {
    int in = 0;
    for (int v : e.vertices) in += (mask >> v) & 1u;
    if (in > 0 && in < e.size()) ++d;
  }
  return d;
}

}  // namespace

TEST_CASE("hyperedge validation") {
  Hypergraph3 h(4);
  CHECK_THROWS_AS(h.add_hyperedge({0}), GraphError);
  CHECK_THROWS_AS(h.add_hyperedge({0, 1, 2, 3}), GraphError);
  CHECK_THROWS_AS(h.add_hyperedge({1, 1}), GraphError);
  CHECK_THROWS_AS(h.add_hyperedge({0, 9}), GraphError);
  auto id = h.add_hyperedge({2, 0, 1});
  CHECK(h.hyperedge(id).vertices == std::vector<VertexId>{0, 1, 2});
  CHECK(h.count_of_size(3) == 1);
}

TEST_CASE("incidence graph") {
  Hypergraph3 two(2);
  two.add_hyperedge({0, 1});
  auto g2 = incidence_graph(two);
  CHECK(g2.graph.num_vertices() == 2);
  CHECK(g2.graph.num_edges() == 1);

  Hypergraph3 three(3);
  three.add_hyperedge({0, 1, 2});
  auto g3 = incidence_graph(three);
  CHECK(g3.graph.num_vertices() == 4);
  CHECK(g3.graph.degree(3) == 3);

  three.add_hyperedge({0, 1});
  auto g4 = incidence_graph(three);
  CHECK(g4.graph.num_vertices() == 4);
  CHECK(g4.graph.num_edges() == 4);
}

TEST_CASE("boundary") {
  Hypergraph3 h(3);
  auto e = h.add_hyperedge({0, 1, 2});
  std::vector<VertexId> a{0};
  CHECK(boundary_h(h, a) == std::vector<HyperedgeId>{e});
  std::vector<VertexId> all{0, 1, 2};
  CHECK(boundary_h(h, all).empty());

  Hypergraph3 t(3);
  t.add_hyperedge({0, 1});
  auto ac = t.add_hyperedge({0, 2});
  auto bc = t.add_hyperedge({1, 2});
  std::vector<VertexId> ab{0, 1};
  CHECK(boundary_h(t, ab) == std::vector<HyperedgeId>{ac, bc});
  CHECK(degree_of_set(t, ab) == 2);
}

TEST_CASE("detach") {
  Hypergraph3 h(4);
  auto e3 = h.add_hyperedge({0, 1, 2});
  auto e2 = h.add_hyperedge({0, 1});
  auto d3 = detach(h, e3, 0);
  CHECK(d3.hyperedge(e3).vertices == std::vector<VertexId>{1, 2});
  auto d2 = detach(h, e2, 0);
  CHECK_FALSE(d2.has_hyperedge(e2));
  CHECK_THROWS_AS(detach(h, e3, 3), GraphError);
}

TEST_CASE("quotient") {
  Hypergraph3 h(4);
  auto e = h.add_hyperedge({0, 1, 2});
  auto inside = h.add_hyperedge({0, 1});
  auto q1 = quotient(h, Partition::singletons(4));
  CHECK(q1.hypergraph.hyperedge(e).size() == 3);
  auto q2 = quotient(h, Partition(4, {{0, 1}, {2}, {3}}));
  CHECK(q2.hypergraph.hyperedge(e).size() == 2);
  CHECK_FALSE(q2.hypergraph.has_hyperedge(inside));
  CHECK(q2.origin.at(e) == e);
  CHECK_THROWS_AS(Partition(4, {{0, 1}, {1, 2, 3}}), GraphError);
  CHECK_THROWS_AS(Partition(4, {{0, 1}, {2}}), GraphError);
}

TEST_CASE("switch") {
  auto h = switch_gadget();
  REQUIRE(switchable_at(h, 0));
  auto s = switch_at(h, 0);
  CHECK(degree_sequence(s) == degree_sequence(h));
  CHECK(oracle::isomorphic(incidence_graph(s).graph, incidence_graph(h).graph));
  CHECK(s.hyperedge(0).vertices == std::vector<VertexId>{0, 3});
  CHECK(s.hyperedge(1).vertices == std::vector<VertexId>{0, 4});
  CHECK(s.hyperedge(2).vertices == std::vector<VertexId>{0, 1, 2});
  auto back = switch_at(s, 0);
  CHECK(hypergraphs_isomorphic(back, h));

  Hypergraph3 bad(4);
  bad.add_hyperedge({0, 1});
  bad.add_hyperedge({0, 2});
  bad.add_hyperedge({0, 3});
  CHECK_FALSE(switchable_at(bad, 0));
  CHECK_THROWS_WITH_AS(switch_at(bad, 0), doctest::Contains("switch precondition"), GraphError);
}

TEST_CASE("switches preserve degrees and incidence graphs on random hypergraphs") {
  std::mt19937 rng(21);
  int switched = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto h = random_hypergraph(5 + trial % 3, 4 + trial % 5, 0.4, rng);
    for (int u = 0; u < h.num_vertices(); ++u) {
      if (!switchable_at(h, u)) continue;
      auto s = switch_at(h, u);
      CHECK(degree_sequence(s) == degree_sequence(h));
      CHECK(oracle::isomorphic(incidence_graph(s).graph, incidence_graph(h).graph));
      ++switched;
    }
  }
  CHECK(switched > 50);
}

TEST_CASE("related search") {
  auto h = switch_gadget();
  auto same = related_search(h, h, 2);
  REQUIRE(same.has_value());
  CHECK(same->empty());
  auto lopsided = h;
  lopsided.add_hyperedge({1, 2});
  auto target = switch_at(lopsided, 0);
  REQUIRE_FALSE(hypergraphs_isomorphic(lopsided, target));
  auto one = related_search(lopsided, target, 2);
  REQUIRE(one.has_value());
  auto replay = lopsided;
  for (VertexId u : *one) replay = switch_at(replay, u);
  CHECK(hypergraphs_isomorphic(replay, target));
  CHECK(one->size() == 1);
  Hypergraph3 other(5);
  other.add_hyperedge({0, 1});
  CHECK_FALSE(related_search(h, other, 3).has_value());
  auto rel = related_hypergraphs(h, 2);
  REQUIRE_FALSE(rel.empty());
  CHECK(rel.front().switches.empty());
}

TEST_CASE("hyper edge connectivity") {
  Hypergraph3 t(3);
  t.add_hyperedge({0, 1});
  t.add_hyperedge({0, 2});
  t.add_hyperedge({1, 2});
  CHECK(hyper_edge_connectivity(t) == 2);
  Hypergraph3 s(3);
  s.add_hyperedge({0, 1, 2});
  CHECK(hyper_edge_connectivity(s) == 1);
  CHECK_THROWS_AS(hyper_edge_connectivity(Hypergraph3(1)), GraphError);

  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    auto h = random_hypergraph(4 + trial % 4, 6 + trial % 6, 0.5, rng);
    int n = h.num_vertices();
    int best = 1 << 20;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) best = std::min(best, brute_d(h, mask));
    CHECK(hyper_edge_connectivity(h) == best);
  }
}

TEST_CASE("hypergraph certificates agree with incidence graph isomorphism") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 150; ++trial) {
    auto a = random_hypergraph(4, 3 + trial % 3, 0.5, rng);
    auto b = random_hypergraph(4, a.num_hyperedges(), 0.5, rng);
    // coloured incidence graphs: brute force over vertex permutations of H
    bool expect = false;
    std::vector<int> perm{0, 1, 2, 3};
    do {
      std::multiset<std::vector<int>> ea, eb;
      for (const auto& e : a.hyperedges()) {
        std::vector<int> m;
        for (int v : e.vertices) m.push_back(perm[v]);
        std::sort(m.begin(), m.end());
        ea.insert(m);
      }
      for (const auto& e : b.hyperedges()) eb.insert(e.vertices);
      if (ea == eb) expect = true;
    } while (!expect && std::next_permutation(perm.begin(), perm.end()));
    CHECK(hypergraphs_isomorphic(a, b) == expect);
  }
}

TEST_CASE("hypergraph text format") {
  auto h = read_hypergraph_string("# vertices a b c d\n7: a b c\nb d\nlonely\n");
  CHECK(h.num_vertices() == 5);
  CHECK(h.name(4) == "lonely");
  CHECK(h.has_hyperedge(7));
  CHECK(h.hyperedge(7).size() == 3);
  auto back = read_hypergraph_string(write_hypergraph(h));
  CHECK(back.num_vertices() == h.num_vertices());
  REQUIRE(back.num_hyperedges() == h.num_hyperedges());
  for (size_t i = 0; i < h.hyperedges().size(); ++i) {
    CHECK(back.hyperedges()[i].id == h.hyperedges()[i].id);
    CHECK(back.hyperedges()[i].vertices == h.hyperedges()[i].vertices);
  }
  CHECK_THROWS_AS(read_hypergraph_string("a b c d\n"), GraphError);
}

TEST_CASE("hypergraph enumeration") {
  auto two = enumerate_hypergraphs(2, 2);
  // empty, {ab}, {ab,ab}
  CHECK(two.size() == 3);
  auto three = enumerate_hypergraphs(3, 1);
  // empty, one 2-edge, one 3-edge
  CHECK(three.size() == 3);
}
