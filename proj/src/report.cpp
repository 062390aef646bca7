#include "lhc/report.hpp"

#include <cstdio>

#include "lhc/io.hpp"

namespace lhc {

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string graph_hash(const Multigraph& g) { return hex64(fnv1a(write_edgelist_string(g))); }

Json to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertices", g.num_vertices()}, {"edges", edges}};
}

Multigraph graph_from_json(const Json& j) {
  Multigraph g(j.at("vertices").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

Json to_json(const Trail& t) {
  Json a = Json::array();
  for (size_t i = 0; i < t.vertices.size(); ++i) {
    a.push_back(t.vertices[i]);
    if (i < t.edges.size()) a.push_back(t.edges[i]);
  }
  return a;
}

Trail trail_from_json(const Json& j) {
  if (!j.is_array() || j.size() % 2 == 0) throw GraphError("trail JSON must alternate vertices and edges");
  Trail t;
  for (size_t i = 0; i < j.size(); ++i) (i % 2 ? t.edges : t.vertices).push_back(j[i].get<int>());
  return t;
}

Json to_json(const Verdict& v) {
  return {{"checker", v.checker}, {"applicable", v.applicable}, {"passed", v.passed}, {"witness", v.witness}};
}

Verdict verdict_from_json(const Json& j) {
  return Verdict{j.at("checker").get<std::string>(), j.at("applicable").get<bool>(), j.at("passed").get<bool>(),
                 j.at("witness").get<std::string>()};
}

Json to_json(const LineProfile& p) {
  return {{"edges", p.edges},
          {"edge_connectivity", p.edge_connectivity.to_string()},
          {"essential_edge_connectivity", p.essential.to_string()},
          {"two_essential_edge_connectivity", p.two_essential.to_string()},
          {"line_connectivity", p.line_connectivity},
          {"line_essential_connectivity", p.line_essential},
          {"qualifying", p.qualifying}};
}

Json to_json(const Partition& p) { return p.classes(); }

Json to_json(const Quasigraph& q) {
  Json a = Json::array();
  for (const auto& [id, pair] : q.assignment()) a.push_back({{"hyperedge", id}, {"pair", {pair.first, pair.second}}});
  return a;
}

Json to_json(const SkeletalWitness& w) {
  return {{"switches", w.switches},
          {"sigma", to_json(w.sigma)},
          {"partition", to_json(w.partition)},
          {"transcript", w.transcript},
          {"nodes", w.nodes}};
}

Json to_json(const CoreResult& c) {
  Json paths = Json::array();
  for (const auto& p : c.paths) paths.push_back({{"edges", p.edges}, {"vertices", p.vertices}});
  return {{"core", to_json(c.core)},
          {"core_to_graph", c.core_to_graph},
          {"paths", paths},
          {"leaves", c.leaves},
          {"transient", c.transient},
          {"protected", c.protected_vertices},
          {"discarded_loops", c.discarded_loops},
          {"trivial", c.trivial},
          {"hypothesis_ok", c.hypothesis_ok},
          {"log", c.log}};
}

Json to_json(const HyperReduction& r) {
  Json h_of = Json::object();
  for (const auto& [w, id] : r.h_of) h_of[std::to_string(w)] = id;
  return {{"h0", write_hypergraph(r.h0)}, {"w", r.w}, {"h_of", h_of}, {"permanent", r.permanent}, {"log", r.log}};
}

Json to_json(const AnchoredHypergraph& a) {
  return {{"he", write_hypergraph(a.he)}, {"e1", a.e1}, {"e2", a.e2}, {"k1", a.k1}, {"k2", a.k2},
          {"a1", a.a1}, {"a2", a.a2}, {"second_detach_skipped", a.second_detach_skipped}, {"log", a.log}};
}

Json to_json(const EndgameResult& r) {
  Json j = {{"route", to_string(r.route)},
            {"trail", to_json(r.trail)},
            {"verified", r.verified},
            {"transcript", r.transcript}};
  if (r.anchored) j["anchored"] = to_json(*r.anchored);
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (r.small) j["small_core"] = {{"applicable", r.small->applicable}, {"bound_holds", r.small->bound_holds},
                                  {"trees_found", r.small->trees.has_value()}};
  return j;
}

Json to_json(const CountingReport& r) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts()) verdicts.push_back(to_json(v));
  Json j = {{"n", r.n}, {"m", r.m}, {"m2", r.m2}, {"m3", r.m3}, {"mbar2", r.mbar2}, {"mbar3", r.mbar3},
            {"s_h0", r.s_h0}, {"s_he", r.s_he}, {"epsilon", r.epsilon}, {"m0_3", r.m0_3}, {"mt0_2", r.mt0_2},
            {"mt0_3", r.mt0_3}, {"d0", r.d0}, {"premise3", r.premise3}, {"verdicts", verdicts}};
  return j;
}

Json to_json(const ChargeLedger& l) {
  Json transfers = Json::array();
  for (const auto& t : l.transfers)
    transfers.push_back({{"rule", to_string(t.rule)}, {"sender", t.sender}, {"to_hyperedge", t.to_hyperedge},
                         {"receiver", t.receiver}, {"via", t.via}, {"amount_fifteenths", t.amount}});
  Json he_init = Json::object(), he_final = Json::object();
  for (const auto& [id, c] : l.hyperedge_initial) he_init[std::to_string(id)] = c;
  for (const auto& [id, c] : l.hyperedge_final) he_final[std::to_string(id)] = c;
  return {{"unit", "1/15"},
          {"vertex_initial", l.vertex_initial},
          {"vertex_final", l.vertex_final},
          {"hyperedge_initial", he_init},
          {"hyperedge_final", he_final},
          {"transfers", transfers},
          {"conserved", l.conserved()}};
}

Json to_json(const PairCertificate& c) {
  Json verdicts = Json::array();
  for (const auto& v : c.verdicts) verdicts.push_back(to_json(v));
  Json j = {{"endgame", to_json(c.endgame)}, {"verdicts", verdicts}, {"ok", c.ok()}};
  if (c.counting) j["counting"] = to_json(*c.counting);
  if (c.ledger) j["ledger"] = to_json(*c.ledger);
  return j;
}

std::string report_hash(const Json& report) {
  Json copy = report;
  copy.erase("hash");
  copy.erase("timing");
  return hex64(fnv1a(copy.dump()));
}

Json finalize_report(Json body, std::string_view kind) {
  body["schema"] = kReportSchema;
  body["kind"] = std::string(kind);
  body["hash"] = report_hash(body);
  return body;
}

}  // namespace lhc
