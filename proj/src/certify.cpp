#include "lhc/certify.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lhc {

namespace {

Verdict make(std::string checker, bool passed, std::string witness = {}) {
  return Verdict{std::move(checker), true, passed, passed ? std::string{} : std::move(witness)};
}

Verdict skipped(std::string checker, std::string reason) {
  return Verdict{std::move(checker), false, true, std::move(reason)};
}

int num_components(const Multigraph& g) { return static_cast<int>(components(g).size()); }

}  // namespace

CountingReport counting_report(const Hypergraph3& h0, const Hypergraph3& he, const Partition& s,
                               const Quasigraph& sigma) {
  CountingReport r;
  r.n = s.size();
  if (r.n < 2) throw GraphError("counting not applicable: partition has one class");
  if (h0.num_vertices() != he.num_vertices()) throw GraphError("H0 and He differ in vertex count");
  QuotientQuasigraph qq = quotient_quasigraph(sigma, s);
  r.he_quot = qq.quotient.hypergraph;
  r.tau = qq.quasigraph;
  r.m = r.he_quot.num_hyperedges();
  for (const Hyperedge& e : r.he_quot.hyperedges()) {
    bool used = r.tau.used(e.id);
    if (e.size() == 2) ++(used ? r.m2 : r.mbar2);
    else ++(used ? r.m3 : r.mbar3);
    r.s_he += e.size();
  }
  r.h0_quot = quotient(h0, s).hypergraph;
  r.tau0 = Quasigraph(r.h0_quot);
  for (const auto& [id, pair] : r.tau.assignment())
    if (r.h0_quot.has_hyperedge(id)) r.tau0.assign(id, pair.first, pair.second);
  for (const Hyperedge& e : r.h0_quot.hyperedges()) {
    if (e.size() == 2) ++r.mt0_2;
    else ++r.mt0_3;
    if (e.size() == 3 && r.tau0.used(e.id)) ++r.m0_3;
  }
  r.d0.resize(r.n);
  for (int p = 0; p < r.n; ++p) {
    r.d0[p] = r.h0_quot.degree(p);
    r.s_h0 += r.d0[p];
  }
  r.epsilon = r.s_h0 - r.s_he;

  r.premise3 = num_components(pi_star(r.tau).graph) > 1 ||
               num_components(incidence_graph(complement(r.tau)).graph) > 1;
  const int n = r.n;
  r.eq1 = r.m2 + r.m3 <= n - 1;
  r.eq2 = r.mbar2 + 2 * r.mbar3 <= n - 1;
  r.eq3 = r.m <= 2 * n - 3 - r.mbar3;
  r.s_he_identity = r.s_he == 2 * (r.m2 + r.mbar2) + 3 * (r.m3 + r.mbar3) && r.s_he == 2 * r.m + r.m3 + r.mbar3;
  r.epsilon_bound = r.epsilon <= 4;
  r.m0_3_bound = r.m0_3 >= r.m3;
  r.eq_s_h0 = r.s_h0 <= 4 * n - 6 + (r.m3 - r.mbar3) + r.epsilon;
  r.eq_main = r.s_h0 - 4 * n - r.m0_3 <= -2;
  r.eq_small = 2 * (r.mt0_2 + r.mt0_3) <= 2 * (2 * n - 3) + r.epsilon;
  if (n <= 4) r.eq_few = r.mt0_2 + r.mt0_3 <= 7;
  return r;
}

std::vector<Verdict> CountingReport::verdicts() const {
  std::vector<Verdict> v;
  auto nums = [](std::initializer_list<std::pair<const char*, int>> xs) {
    std::string s;
    for (auto [k, x] : xs) s += std::string(s.empty() ? "" : " ") + k + "=" + std::to_string(x);
    return s;
  };
  v.push_back(make("counting.ineq1", eq1, nums({{"m2", m2}, {"m3", m3}, {"n", n}})));
  v.push_back(make("counting.ineq2", eq2, nums({{"mbar2", mbar2}, {"mbar3", mbar3}, {"n", n}})));
  v.push_back(make("counting.s_he_identity", s_he_identity, nums({{"s_he", s_he}, {"m", m}})));
  v.push_back(make("counting.epsilon_bound", epsilon_bound, nums({{"epsilon", epsilon}})));
  v.push_back(make("counting.m0_3_bound", m0_3_bound, nums({{"m0_3", m0_3}, {"m3", m3}})));
  const std::string no_premise = "neither tau* nor G(complement) is disconnected";
  if (premise3) {
    v.push_back(make("counting.ineq3", eq3, nums({{"m", m}, {"n", n}, {"mbar3", mbar3}})));
    v.push_back(make("counting.s_h0", eq_s_h0, nums({{"s_h0", s_h0}, {"epsilon", epsilon}})));
    v.push_back(make("counting.main", eq_main, nums({{"s_h0", s_h0}, {"m0_3", m0_3}, {"n", n}})));
    v.push_back(make("counting.small", eq_small, nums({{"mt0_2", mt0_2}, {"mt0_3", mt0_3}, {"epsilon", epsilon}})));
    if (eq_few) v.push_back(make("counting.few", *eq_few, nums({{"mt0_2", mt0_2}, {"mt0_3", mt0_3}})));
    else v.push_back(skipped("counting.few", "more than 4 classes"));
  } else {
    for (const char* c : {"counting.ineq3", "counting.s_h0", "counting.main", "counting.small", "counting.few"})
      v.push_back(skipped(c, no_premise));
  }
  return v;
}

bool CountingReport::all_hold() const {
  auto v = verdicts();
  return std::all_of(v.begin(), v.end(), [](const Verdict& x) { return x.ok(); });
}

std::vector<int> nontrivial_classes(const Partition& s, const CoreResult& core, const HyperReduction& red,
                                    NontrivialReading reading) {
  const size_t threshold = reading == NontrivialReading::AtLeastTwo ? 2 : 1;
  std::vector<int> out;
  for (int i = 0; i < s.size(); ++i)
    if (xhyper(core, red, s[i]).size() >= threshold) out.push_back(i);
  return out;
}

Verdict check_obs_nontriv(const Partition& s, const CoreResult& core, const HyperReduction& red,
                          NontrivialReading reading) {
  const Multigraph& g0 = core.core;
  for (int i : nontrivial_classes(s, core, red, reading)) {
    auto plus = xhyper(core, red, s[i]);
    auto in = membership(g0.num_vertices(), plus);
    bool matching = true;
    for (VertexId v : plus) {
      int inside = 0;
      for (EdgeId e : g0.incident(v)) inside += in[g0.edge(e).other(v)] ? 1 : 0;
      if (inside >= 2) matching = false;
    }
    if (matching) return make("obs.nontriv", false, "class " + std::to_string(i) + " induces a matching in G0");
  }
  return make("obs.nontriv", true);
}

Verdict check_lemma_path(const CoreResult& core, const HyperReduction& red) {
  const Multigraph& g0 = core.core;
  if (g0.num_vertices() < 6) return skipped("lemma.path", "core has fewer than 6 vertices");
  for (VertexId x2 = 0; x2 < g0.num_vertices(); ++x2) {
    auto nb = g0.neighbours(x2);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        int sum = g0.degree(nb[i]) + g0.degree(x2) + g0.degree(nb[j]);
        if (sum < 11)
          return make("lemma.path", false,
                      "path " + std::to_string(nb[i]) + "-" + std::to_string(x2) + "-" + std::to_string(nb[j]) +
                          " has degree sum " + std::to_string(sum));
      }
  }
  auto permanent = [&](VertexId v) { return red.core_to_h0.at(v) >= 0; };
  for (const Edge& e : g0.edges()) {
    for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (permanent(x) && permanent(y) && g0.degree(x) == 3 && g0.degree(y) <= 4)
        return make("lemma.path", false,
                    "permanent degree-3 vertex " + std::to_string(x) + " next to permanent vertex " +
                        std::to_string(y) + " of degree " + std::to_string(g0.degree(y)));
    }
  }
  return make("lemma.path", true);
}

namespace {

// Q -> number of hyperedges containing both P and Q.
std::map<VertexId, int> common_counts(const Hypergraph3& h, VertexId p) {
  std::map<VertexId, int> out;
  for (HyperedgeId id : h.incident(p))
    for (VertexId q : h.hyperedge(id).vertices)
      if (q != p) ++out[q];
  return out;
}

}  // namespace

Verdict check_lemma_forb(const Hypergraph3& hq, bool at_least_five_classes, bool core_at_least_six) {
  if (!at_least_five_classes || !core_at_least_six)
    return skipped("lemma.forb", "needs at least 5 classes and a core on at least 6 vertices");
  for (VertexId p = 0; p < hq.num_vertices(); ++p) {
    const int dp = hq.degree(p);
    bool has_triple = false;
    for (HyperedgeId id : hq.incident(p)) has_triple = has_triple || hq.hyperedge(id).size() == 3;
    for (const auto& [q, c] : common_counts(hq, p)) {
      const int dq = hq.degree(q);
      if (dp == 3 && dq < 7)
        return make("lemma.forb", false,
                    "degree-3 class " + std::to_string(p) + " next to class " + std::to_string(q) + " of degree " +
                        std::to_string(dq));
      if (dp == 4 && has_triple && dq < 6)
        return make("lemma.forb", false,
                    "degree-4 class " + std::to_string(p) + " on a 3-hyperedge next to class " + std::to_string(q) +
                        " of degree " + std::to_string(dq));
    }
  }
  return make("lemma.forb", true);
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::D1: return "D1";
    case Rule::D2: return "D2";
    case Rule::D3: return "D3";
    case Rule::D4: return "D4";
  }
  return "?";
}

long long ChargeLedger::total_initial() const {
  long long t = std::accumulate(vertex_initial.begin(), vertex_initial.end(), 0LL);
  for (const auto& [id, c] : hyperedge_initial) t += c;
  return t;
}

long long ChargeLedger::total_final() const {
  long long t = std::accumulate(vertex_final.begin(), vertex_final.end(), 0LL);
  for (const auto& [id, c] : hyperedge_final) t += c;
  return t;
}

namespace {

int rule_amount(Rule r) {
  switch (r) {
    case Rule::D1:
    case Rule::D2: return kChargeUnit;
    case Rule::D3: return kChargeUnit / 5;
    case Rule::D4: return kChargeUnit / 3;
  }
  return 0;
}

}  // namespace

bool ChargeLedger::amounts_valid() const {
  return std::all_of(transfers.begin(), transfers.end(), [](const Transfer& t) { return t.amount == rule_amount(t.rule); });
}

std::array<int, 4> ChargeLedger::rule_counts() const {
  std::array<int, 4> c{};
  for (const Transfer& t : transfers) ++c[static_cast<int>(t.rule)];
  return c;
}

ChargeLedger discharge(const Hypergraph3& hq, const Quasigraph& tau0, const RootedOrientation& o) {
  const int n = hq.num_vertices();
  if (static_cast<int>(o.associated.size()) != n) throw GraphError("association ill-defined: orientation size");
  if (!is_acyclic(tau0)) throw GraphError("discharging needs an acyclic tau0");
  for (VertexId p = 0; p < n; ++p) {
    HyperedgeId a = o.associated[p];
    if (a < 0) continue;
    if (!hq.has_hyperedge(a) || !tau0.used(a) || o.tail.at(a) != p)
      throw GraphError("association ill-defined at class " + std::to_string(p));
  }
  ChargeLedger L;
  L.vertex_initial.resize(n);
  for (VertexId p = 0; p < n; ++p) L.vertex_initial[p] = kChargeUnit * (hq.degree(p) - 4);
  for (const Hyperedge& e : hq.hyperedges())
    L.hyperedge_initial[e.id] = (e.size() == 3 && tau0.used(e.id)) ? -kChargeUnit : 0;

  auto in_triangle = [&](VertexId q) { return o.associated[q] >= 0 && hq.hyperedge(o.associated[q]).size() == 3; };
  for (VertexId p = 0; p < n; ++p) {
    const HyperedgeId a = o.associated[p];
    if (a >= 0 && hq.hyperedge(a).size() == 3) L.transfers.push_back({Rule::D1, p, true, a, -1, rule_amount(Rule::D1)});
    if (a >= 0 && hq.hyperedge(a).size() == 2) {
      VertexId q = o.head.at(a);
      if (hq.degree(q) == 3) L.transfers.push_back({Rule::D2, p, false, q, -1, rule_amount(Rule::D2)});
    }
    for (HyperedgeId id : hq.incident(p)) {
      for (VertexId q : hq.hyperedge(id).vertices) {
        if (q == p) continue;
        if (hq.degree(q) == 4 && in_triangle(q)) L.transfers.push_back({Rule::D3, p, false, q, id, rule_amount(Rule::D3)});
        if (hq.degree(q) == 3 && id != a) L.transfers.push_back({Rule::D4, p, false, q, id, rule_amount(Rule::D4)});
      }
    }
  }
  L.vertex_final = L.vertex_initial;
  L.hyperedge_final = L.hyperedge_initial;
  for (const Transfer& t : L.transfers) {
    L.vertex_final[t.sender] -= t.amount;
    if (t.to_hyperedge) L.hyperedge_final[t.receiver] += t.amount;
    else L.vertex_final[t.receiver] += t.amount;
  }
  return L;
}

Verdict check_discharging_nonnegative(const ChargeLedger& ledger) {
  for (size_t p = 0; p < ledger.vertex_final.size(); ++p)
    if (ledger.vertex_final[p] < 0)
      return make("discharging.nonnegative", false,
                  "class " + std::to_string(p) + " ends at " + std::to_string(ledger.vertex_final[p]) + "/15");
  for (const auto& [id, c] : ledger.hyperedge_final)
    if (c < 0)
      return make("discharging.nonnegative", false,
                  "hyperedge " + std::to_string(id) + " ends at " + std::to_string(c) + "/15");
  return make("discharging.nonnegative", true);
}

Verdict check_discharging_conclusion(const ChargeLedger& ledger, const CountingReport& report) {
  if (!report.eq_main) return skipped("discharging.conclusion", "the main counting inequality does not hold");
  const long long expected = static_cast<long long>(kChargeUnit) * (report.s_h0 - 4 * report.n - report.m0_3);
  if (!ledger.conserved() || ledger.total_initial() != expected)
    return make("discharging.conclusion", false, "charge not conserved or initial total mismatch");
  const bool nonneg = check_discharging_nonnegative(ledger).passed;
  if (nonneg && ledger.total_final() < 0)
    return make("discharging.conclusion", false, "contradiction: negative total with all charges nonnegative");
  return make("discharging.conclusion", true);
}

Verdict check_prop_s4(const Partition& s, const CoreResult& core) {
  if (core.core.num_vertices() < 6) return skipped("prop.s4", "core has fewer than 6 vertices");
  return make("prop.s4", s.size() <= 4, std::to_string(s.size()) + " classes");
}

Verdict check_prop_s2(const Partition& s, const CoreResult& core, const HyperReduction& red,
                      const AnchoredHypergraph& anchored) {
  if (core.core.num_vertices() < 6) return skipped("prop.s2", "core has fewer than 6 vertices");
  if (s.size() > 2) return make("prop.s2", false, std::to_string(s.size()) + " classes");
  if (s.size() == 1) return make("prop.s2", true);
  const Hypergraph3& h0 = red.h0;
  std::string why = "no trivial class";
  for (const auto& cls : s.classes()) {
    if (cls.size() != 1 || xhyper(core, red, cls).size() >= 2) continue;
    VertexId x = cls.front();
    if (h0.degree(x) != 3) {
      why = "(ii) d(x)=" + std::to_string(h0.degree(x)) + " for x=" + std::to_string(x);
      continue;
    }
    if (!h0.hyperedge(anchored.k1).contains(x) || !h0.hyperedge(anchored.k2).contains(x)) {
      why = "(iii) x=" + std::to_string(x) + " not in both k(e1), k(e2)";
      continue;
    }
    if (h0.hyperedge(anchored.k1).size() != 2 || h0.hyperedge(anchored.k2).size() != 2) {
      why = "(iv) k(e1) or k(e2) has size 3";
      continue;
    }
    return make("prop.s2", true);
  }
  return make("prop.s2", false, why);
}

RootedOrientation quotient_orientation(const Quasigraph& sigma, const Partition& s, const Quasigraph& tau0) {
  std::set<VertexId> roots;
  for (VertexId r : default_orientation(sigma).roots) roots.insert(s.class_of(r));
  std::vector<VertexId> rv(roots.begin(), roots.end());
  return rooted_orientation(tau0, rv);
}

bool PairCertificate::ok() const {
  return endgame.verified && std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.ok(); });
}

PairCertificate certify_pair(const Multigraph& g, const Reduction& r, EdgeId e1, EdgeId e2,
                             const EndgameOptions& options) {
  PairCertificate pc;
  pc.endgame = endgame(g, r, e1, e2, options);
  pc.verdicts.push_back(make("endgame.trail", pc.endgame.verified, "trail failed verification"));
  if (pc.endgame.small)
    pc.verdicts.push_back(make("lemma.small", pc.endgame.small->ok(), "no two edge-disjoint spanning trees"));
  if (!pc.endgame.witness) return pc;
  const SkeletalWitness& w = *pc.endgame.witness;
  const AnchoredHypergraph& an = *pc.endgame.anchored;
  pc.verdicts.push_back(check_prop_s4(w.partition, r.core));
  pc.verdicts.push_back(check_prop_s2(w.partition, r.core, r.hyper, an));
  pc.verdicts.push_back(check_obs_nontriv(w.partition, r.core, r.hyper));
  if (w.partition.size() < 2) return pc;
  if (!w.switches.empty()) {
    pc.verdicts.push_back(skipped("counting", "witness lives on a related hypergraph"));
    return pc;
  }
  pc.counting = counting_report(r.hyper.h0, an.he, w.partition, w.sigma);
  for (auto& v : pc.counting->verdicts()) pc.verdicts.push_back(std::move(v));
  const bool five = w.partition.size() >= 5, six = r.core.core.num_vertices() >= 6;
  pc.verdicts.push_back(check_lemma_forb(pc.counting->h0_quot, five, six));
  if (five) {
    pc.ledger = discharge(pc.counting->h0_quot, pc.counting->tau0,
                          quotient_orientation(w.sigma, w.partition, pc.counting->tau0));
    pc.verdicts.push_back(check_discharging_conclusion(*pc.ledger, *pc.counting));
  }
  return pc;
}

}  // namespace lhc
