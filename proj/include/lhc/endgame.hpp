#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lhc/quasigraph.hpp"
#include "lhc/reduction.hpp"
#include "lhc/trails.hpp"

namespace lhc {

struct EndgameOptions {
  SkeletalOptions skeletal;
  int max_trail_edges = 30;  // brute-force routes on G
  int max_join_edges = 48;   // searches in G(He)
};

/// How the trail was obtained.
enum class EndgameRoute {
  Collapsed,    // k(e1) or k(e2) empty: direct search in G
  SmallCore,    // |V(G0)| <= 5: spanning trees certified, direct search in G
  OneClass,     // qt_join on He, then lift
  TwoClass,     // remove x, qt_join on H1, add f, then lift
  Switched,     // witness on a related hypergraph: spanning search in G(He), then lift
  Fallback,     // configuration outside the two branches: spanning search in G(He), then lift
};
std::string to_string(EndgameRoute r);

struct EndgameResult {
  Trail trail;
  EndgameRoute route = EndgameRoute::Collapsed;
  std::vector<std::string> transcript;
  std::optional<AnchoredHypergraph> anchored;
  std::optional<SkeletalWitness> witness;
  std::optional<LemmaSmallResult> small;
  bool verified = false;  // internally dominating (e1,e2)-trail of G
};

/// Throws GraphError (or SearchExhausted) with the transcript so far when a
/// sub-search fails.
EndgameResult endgame(const Multigraph& g, const Reduction& r, EdgeId e1, EdgeId e2, const EndgameOptions& options = {});
EndgameResult endgame(const Multigraph& g, EdgeId e1, EdgeId e2, const EndgameOptions& options = {});

/// The trail is an internally dominating trail of g starting with e1 and ending with e2.
bool verify_endgame_trail(const Multigraph& g, const Trail& t, EdgeId e1, EdgeId e2);

}  // namespace lhc
