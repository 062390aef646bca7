#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lhc/certify.hpp"
#include "lhc/generators.hpp"

using namespace lhc;

namespace {

Multigraph k33() { return complete_bipartite(3, 3); }

std::vector<VertexId> all_but(int n, VertexId skip) {
  std::vector<VertexId> out;
  for (int v = 0; v < n; ++v)
    if (v != skip) out.push_back(v);
  return out;
}

/// Reference: replay the transfer log on the initial charges.
std::pair<std::vector<int>, std::map<HyperedgeId, int>> replay(const ChargeLedger& l) {
  auto v = l.vertex_initial;
  auto h = l.hyperedge_initial;
  for (const auto& t : l.transfers) {
    v[t.sender] -= t.amount;
    if (t.to_hyperedge) h[t.receiver] += t.amount;
    else v[t.receiver] += t.amount;
  }
  return {v, h};
}

}  // namespace

TEST_CASE("counting report identities") {
  // h0 on 4 vertices, two classes {0,1} and {2,3}
  Hypergraph3 h0(4);
  h0.add_hyperedge({0, 2});
  h0.add_hyperedge({1, 3});
  h0.add_hyperedge({0, 3});
  Hypergraph3 he(4);
  he.add_hyperedge_with_id(2, std::vector<VertexId>{0, 3});
  Partition s(4, {{0, 1}, {2, 3}});
  Quasigraph sigma(he);
  auto r = counting_report(h0, he, s, sigma);
  CHECK(r.n == 2);
  CHECK(r.s_h0 == 6);
  CHECK(r.s_he == 2);
  CHECK(r.epsilon == 4);
  CHECK(r.mt0_2 + r.mt0_3 == 3);
  // 2-3+epsilon/2 allows exactly three hyperedges of H0/S
  CHECK(r.eq_small);
  CHECK(r.s_he_identity);
  CHECK(r.eq1);
  CHECK(r.eq2);

  auto more = h0;
  more.add_hyperedge({1, 2});
  auto r2 = counting_report(more, he, s, sigma);
  CHECK(r2.epsilon == 6);
  CHECK_FALSE(r2.epsilon_bound);

  CHECK_THROWS_WITH_AS(counting_report(h0, he, Partition::whole(4), sigma), doctest::Contains("counting not applicable"),
                       GraphError);
}

TEST_CASE("forest bound on used hyperedges") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 4 + trial % 4;
    auto h = random_hypergraph(n, 6 + trial % 5, 0.5, rng);
    // greedy acyclic sigma
    Quasigraph sigma(h);
    for (const auto& e : h.hyperedges()) {
      if (rng() % 2) continue;
      sigma.assign(e.id, e.vertices[0], e.vertices[1]);
      if (!is_acyclic(sigma)) sigma.clear(e.id);
    }
    std::vector<int> labels(n);
    for (int v = 0; v < n; ++v) labels[v] = static_cast<int>(rng() % 3);
    labels[0] = 0;
    labels[1] = 1;
    auto s = Partition::from_labels(labels);
    auto r = counting_report(h, h, s, sigma);
    CHECK(r.epsilon == 0);
    CHECK(r.s_he_identity);
    CHECK(r.m0_3_bound);
    // tau acyclic on n classes
    if (is_acyclic(r.tau)) CHECK(r.eq1);
    auto v = r.verdicts();
    CHECK(v.size() == 10);
    if (!r.premise3)
      for (const auto& x : v)
        if (x.checker == "counting.main") CHECK_FALSE(x.applicable);
  }
}

TEST_CASE("nontrivial classes and their observation") {
  auto g = k33();
  auto core = compute_core(g);
  auto red = build_h0(core, std::vector<VertexId>{});
  Partition edge_class(6, {{0, 3}, {1, 2, 4, 5}});
  CHECK(nontrivial_classes(edge_class, core, red) == std::vector<int>{0, 1});
  auto bad = check_obs_nontriv(edge_class, core, red);
  CHECK_FALSE(bad.passed);
  Partition singles = Partition::singletons(6);
  CHECK(nontrivial_classes(singles, core, red).empty());
  CHECK(nontrivial_classes(singles, core, red, NontrivialReading::AtLeastOne).size() == 6);
  CHECK(check_obs_nontriv(singles, core, red).passed);

  // a temporary vertex absorbed into a singleton class gives two edges into it
  auto k4 = complete_graph(4);
  auto rk = reduce(k4);
  CHECK(xhyper(rk.core, rk.hyper, std::vector<VertexId>{0}).size() == 1);
  Partition two(3, {{0, 1}, {2}});
  auto plus = xhyper(rk.core, rk.hyper, two[0]);
  CHECK(plus.size() == 3);
  CHECK(check_obs_nontriv(two, rk.core, rk.hyper).passed);
}

TEST_CASE("lemma path") {
  auto core = compute_core(k33());
  auto red = build_h0(core, std::vector<VertexId>{});
  auto v = check_lemma_path(core, red);
  CHECK(v.applicable);
  CHECK_FALSE(v.passed);
  CHECK(v.witness.find("degree sum 9") != std::string::npos);

  auto small = compute_core(complete_graph(4));
  CHECK_FALSE(check_lemma_path(small, build_h0(small, std::vector<VertexId>{})).applicable);

  for (const auto& inst : find_qualifying_instances(16)) {
    auto r = reduce(inst.graph);
    CAPTURE(inst.name);
    CHECK(check_lemma_path(r.core, r.hyper).ok());
  }
}

TEST_CASE("lemma forb") {
  Hypergraph3 low(5);
  for (int i = 0; i < 5; ++i) low.add_hyperedge({i, (i + 1) % 5});
  low.add_hyperedge({0, 2});
  auto v = check_lemma_forb(low, true, true);
  CHECK(v.applicable);
  CHECK_FALSE(v.passed);
  CHECK_FALSE(check_lemma_forb(low, false, true).applicable);

  // minimum degree 7: nothing to forbid
  Hypergraph3 dense(5);
  for (int u = 0; u < 5; ++u)
    for (int w = u + 1; w < 5; ++w) {
      dense.add_hyperedge({u, w});
      dense.add_hyperedge({u, w});
    }
  REQUIRE(dense.degree(0) == 8);
  CHECK(check_lemma_forb(dense, true, true).passed);
}

TEST_CASE("discharging toy configurations") {
  // D1 alone: class 0 associated with the used 3-hyperedge
  Hypergraph3 tri(3);
  auto t = tri.add_hyperedge({0, 1, 2});
  Quasigraph tau(tri);
  tau.assign(t, 0, 1);
  std::vector<VertexId> roots{1, 2};
  auto o = rooted_orientation(tau, roots);
  REQUIRE(o.associated[0] == t);
  auto l = discharge(tri, tau, o);
  auto counts = l.rule_counts();
  CHECK(counts[0] == 1);
  CHECK(l.hyperedge_initial.at(t) == -kChargeUnit);
  CHECK(l.hyperedge_final.at(t) == 0);
  CHECK(l.vertex_final[0] == l.vertex_initial[0] - kChargeUnit);
  CHECK(l.conserved());
  CHECK(l.amounts_valid());

  // degree 7 with D1 and six D4 transfers spends exactly its initial charge
  Hypergraph3 big(11);
  auto a = big.add_hyperedge({0, 7, 8});
  for (int q = 1; q <= 6; ++q) {
    big.add_hyperedge({0, q});
    big.add_hyperedge({q, 9});
    big.add_hyperedge({q, 10});
  }
  REQUIRE(big.degree(0) == 7);
  Quasigraph tb(big);
  tb.assign(a, 0, 7);
  auto ob = rooted_orientation(tb, all_but(11, 0));
  auto lb = discharge(big, tb, ob);
  int sent = 0, d4 = 0;
  for (const auto& tr : lb.transfers)
    if (tr.sender == 0) {
      sent += tr.amount;
      d4 += tr.rule == Rule::D4;
    }
  CHECK(d4 == 6);
  CHECK(sent == kChargeUnit + 6 * kChargeUnit / 3);
  CHECK(lb.vertex_initial[0] == 3 * kChargeUnit);
  CHECK(lb.vertex_final[0] >= 0);
  CHECK(lb.conserved());
  auto [vf, hf] = replay(lb);
  CHECK(vf == lb.vertex_final);
  CHECK(hf == lb.hyperedge_final);

  // D2: a used 2-hyperedge pointing at a degree-3 head
  Hypergraph3 two(4);
  auto e = two.add_hyperedge({0, 1});
  two.add_hyperedge({1, 2});
  two.add_hyperedge({1, 3});
  Quasigraph td(two);
  td.assign(e, 0, 1);
  auto od = rooted_orientation(td, std::vector<VertexId>{1, 2, 3});
  auto ld = discharge(two, td, od);
  CHECK(ld.rule_counts()[1] == 1);
  CHECK(ld.conserved());

  // D3: a degree-4 class in a 3-hyperedge receives 1/5 through a common hyperedge
  Hypergraph3 d3(5);
  auto tt = d3.add_hyperedge({0, 1, 2});
  d3.add_hyperedge({0, 3});
  d3.add_hyperedge({0, 4});
  d3.add_hyperedge({0, 3});
  Quasigraph t3(d3);
  t3.assign(tt, 0, 1);
  auto o3 = rooted_orientation(t3, std::vector<VertexId>{1, 2, 3, 4});
  auto l3 = discharge(d3, t3, o3);
  CHECK(l3.rule_counts()[2] >= 1);
  CHECK(l3.amounts_valid());
  CHECK(l3.conserved());

  // a bogus association is rejected
  auto broken = o3;
  broken.associated[3] = tt;
  CHECK_THROWS_WITH_AS(discharge(d3, t3, broken), doctest::Contains("association ill-defined"), GraphError);
}

TEST_CASE("discharging verdicts") {
  Hypergraph3 low(5);
  for (int i = 0; i < 5; ++i) low.add_hyperedge({i, (i + 1) % 5});
  low.add_hyperedge({0, 2});
  Quasigraph none(low);
  auto l = discharge(low, none, default_orientation(none));
  CHECK_FALSE(check_discharging_nonnegative(l).passed);

  CountingReport fake;
  fake.eq_main = false;
  CHECK_FALSE(check_discharging_conclusion(l, fake).applicable);
  fake.eq_main = true;
  fake.n = 5;
  fake.s_h0 = 12;
  fake.m0_3 = 0;
  auto c = check_discharging_conclusion(l, fake);
  CHECK(c.applicable);
  CHECK(c.passed);
}

TEST_CASE("class count bounds S4 and S2") {
  auto core = compute_core(k33());
  CHECK(check_prop_s4(Partition::singletons(4), core).passed);
  Partition five(6, {{0}, {1}, {2}, {3}, {4, 5}});
  CHECK_FALSE(check_prop_s4(five, core).passed);
  auto small = compute_core(complete_graph(4));
  CHECK_FALSE(check_prop_s4(five, small).applicable);

  auto red = build_h0(core, std::vector<VertexId>{});
  AnchoredHypergraph an;
  an.k1 = 0;
  an.k2 = 1;
  Partition three(6, {{0}, {1}, {2, 3, 4, 5}});
  CHECK_FALSE(check_prop_s2(three, core, red, an).passed);
  CHECK(check_prop_s2(Partition::whole(6), core, red, an).passed);
}

TEST_CASE("certify pair on a qualifying instance") {
  auto instances = find_qualifying_instances(4);
  REQUIRE_FALSE(instances.empty());
  const auto& g = instances.front().graph;
  auto r = reduce(g);
  auto pc = certify_pair(g, r, 0, g.num_edges() - 1);
  CHECK(pc.ok());
  CHECK(pc.endgame.verified);
}
