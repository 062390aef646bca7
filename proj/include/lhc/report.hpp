#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lhc/certify.hpp"
#include "lhc/connectivity.hpp"
#include "lhc/endgame.hpp"
#include "lhc/reduction.hpp"

namespace lhc {

using Json = nlohmann::json;

inline constexpr const char* kReportSchema = "lhc.report/1";

std::uint64_t fnv1a(std::string_view bytes);
std::string hex64(std::uint64_t h);

/// Hash of the edge-list text of g.
std::string graph_hash(const Multigraph& g);

Json to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);
/// [v0, f1, v1, ..., fl, vl]
Json to_json(const Trail& t);
Trail trail_from_json(const Json& j);
Json to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);
Json to_json(const LineProfile& p);
Json to_json(const Partition& p);
Json to_json(const Quasigraph& q);
Json to_json(const SkeletalWitness& w);
Json to_json(const CoreResult& c);
Json to_json(const HyperReduction& r);
Json to_json(const AnchoredHypergraph& a);
Json to_json(const EndgameResult& r);
Json to_json(const CountingReport& r);
Json to_json(const ChargeLedger& l);
Json to_json(const PairCertificate& c);

/// Adds schema, kind and a hash over the canonical dump of everything except
/// "hash" and "timing".
Json finalize_report(Json body, std::string_view kind);
std::string report_hash(const Json& report);

}  // namespace lhc
