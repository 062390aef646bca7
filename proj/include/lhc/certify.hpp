#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lhc/endgame.hpp"
#include "lhc/hypergraph.hpp"
#include "lhc/quasigraph.hpp"
#include "lhc/reduction.hpp"

namespace lhc {

struct Verdict {
  std::string checker;
  bool applicable = true;
  bool passed = true;
  std::string witness;  // counterexample or reason when not applicable

  bool ok() const { return !applicable || passed; }
};

struct CountingReport {
  int n = 0, m = 0;
  int m2 = 0, m3 = 0, mbar2 = 0, mbar3 = 0;
  int s_h0 = 0, s_he = 0, epsilon = 0;
  int m0_3 = 0, mt0_2 = 0, mt0_3 = 0;
  std::vector<int> d0;
  Hypergraph3 h0_quot, he_quot;
  Quasigraph tau, tau0;

  bool premise3 = false;  // tau* or G(complement of tau) is disconnected
  bool eq1 = false, eq2 = false, eq3 = false;
  bool s_he_identity = false;
  bool epsilon_bound = false;
  bool m0_3_bound = false;
  bool eq_s_h0 = false, eq_main = false, eq_small = false;
  std::optional<bool> eq_few;  // only for n <= 4

  std::vector<Verdict> verdicts() const;
  bool all_hold() const;
};

/// s must be a partition of V(he) = V(h0) with at least two classes and sigma a
/// quasigraph on he. Throws GraphError("counting not applicable") when n = 1.
CountingReport counting_report(const Hypergraph3& h0, const Hypergraph3& he, const Partition& s, const Quasigraph& sigma);

enum class NontrivialReading { AtLeastTwo, AtLeastOne };
/// Indices of classes X with |X+| above the threshold.
std::vector<int> nontrivial_classes(const Partition& s, const CoreResult& core, const HyperReduction& red,
                                    NontrivialReading reading = NontrivialReading::AtLeastTwo);
/// G0[X+] is not a matching for every nontrivial class X.
Verdict check_obs_nontriv(const Partition& s, const CoreResult& core, const HyperReduction& red,
                          NontrivialReading reading = NontrivialReading::AtLeastTwo);

/// Paths x1x2x3 of G0 have degree sum >= 11; no permanent degree-3 vertex is
/// adjacent to a permanent vertex of degree <= 4. Not applicable below 6 vertices.
Verdict check_lemma_path(const CoreResult& core, const HyperReduction& red);

/// Degree conditions on neighbours in H0/S; applicable when n >= 5 and |V(G0)| >= 6.
Verdict check_lemma_forb(const Hypergraph3& h0_quot, bool at_least_five_classes, bool core_at_least_six);

enum class Rule { D1, D2, D3, D4 };
std::string to_string(Rule r);

/// Charges are integers in units of 1/15.
inline constexpr int kChargeUnit = 15;

struct Transfer {
  Rule rule;
  VertexId sender;
  bool to_hyperedge;
  int receiver;          // vertex or hyperedge id
  HyperedgeId via = -1;  // common hyperedge for D3 and D4
  int amount;
};

struct ChargeLedger {
  std::vector<int> vertex_initial, vertex_final;
  std::map<HyperedgeId, int> hyperedge_initial, hyperedge_final;
  std::vector<Transfer> transfers;

  long long total_initial() const;
  long long total_final() const;
  bool conserved() const { return total_initial() == total_final(); }
  /// Every transfer carries the amount of its rule (1, 1, 1/5, 1/3).
  bool amounts_valid() const;
  std::array<int, 4> rule_counts() const;
};

/// Initial charges d0(P) - 4 on vertices and -1 on 3-hyperedges used by tau0,
/// then rules D1-D4. Association and heads come from the orientation of tau0.
ChargeLedger discharge(const Hypergraph3& h0_quot, const Quasigraph& tau0, const RootedOrientation& orientation);

/// Fails with the first element whose final charge is negative.
Verdict check_discharging_nonnegative(const ChargeLedger& ledger);
/// Applicable when the main counting inequality holds. Passes when the ledger is conserved and the
/// negative total surfaces as a negative final charge; an all-nonnegative final
/// state together with a negative total is reported as a contradiction.
Verdict check_discharging_conclusion(const ChargeLedger& ledger, const CountingReport& report);

/// At most 4 classes when |V(G0)| >= 6.
Verdict check_prop_s4(const Partition& s, const CoreResult& core);
/// n <= 2, and for n = 2: a trivial class {x} with d_H0(x) = 3 lying in k(e1)
/// and k(e2), both of size 2.
Verdict check_prop_s2(const Partition& s, const CoreResult& core, const HyperReduction& red,
                      const AnchoredHypergraph& anchored);

/// Orientation of tau0 rooted at the classes holding the roots of sigma.
RootedOrientation quotient_orientation(const Quasigraph& sigma, const Partition& s, const Quasigraph& tau0);

struct PairCertificate {
  EndgameResult endgame;
  std::optional<CountingReport> counting;
  std::optional<ChargeLedger> ledger;
  std::vector<Verdict> verdicts;

  bool ok() const;
};

/// Endgame plus every certificate that applies to its witness.
PairCertificate certify_pair(const Multigraph& g, const Reduction& r, EdgeId e1, EdgeId e2,
                             const EndgameOptions& options = {});

}  // namespace lhc
