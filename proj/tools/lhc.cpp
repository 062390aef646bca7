// Command-line front end: connectivity profiles, reductions, skeletal
// witnesses, certificates and trails for line-graph instances.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "lhc/certify.hpp"
#include "lhc/connectivity.hpp"
#include "lhc/endgame.hpp"
#include "lhc/generators.hpp"
#include "lhc/io.hpp"
#include "lhc/report.hpp"
#include "lhc/trails.hpp"

using namespace lhc;

namespace {

// Human-readable output; silenced when the JSON report goes to stdout.
bool g_quiet = false;
std::ostream& text() {
  static std::ostream null(nullptr);
  return g_quiet ? null : std::cout;
}


constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input;
  std::string format = "auto";
  std::string json_out;
  std::optional<unsigned> seed;
  std::vector<std::string> bounds;
};

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string detect_format(const std::string& text) {
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i == std::string::npos) throw UsageError("empty input");
  if (text.compare(i, 11, ">>sparse6<<") == 0 || text[i] == ':') return "sparse6";
  if (text.compare(i, 10, ">>graph6<<") == 0) return "graph6";
  if (text[i] == '#' || std::isdigit(static_cast<unsigned char>(text[i]))) {
    // A lone graph6 line can start with a digit only if it encodes many vertices; edge lists have spaces.
    std::string first = text.substr(i, text.find('\n', i) - i);
    if (text[i] == '#' || first.find(' ') != std::string::npos) return "edgelist";
  }
  return "graph6";
}

Multigraph load_graph(const Common& c) {
  std::string text = slurp(c.input);
  std::string fmt = c.format == "auto" ? detect_format(text) : c.format;
  if (fmt == "graph6" || fmt == "sparse6") {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line))
      if (line.find_first_not_of(" \t\r") != std::string::npos) break;
    text = line;
  }
  return read_graph(text, fmt);
}

struct Bounds {
  EndgameOptions endgame;
  int max_line_vertices = 24;
};

Bounds parse_bounds(const std::vector<std::string>& specs) {
  Bounds b;
  for (const auto& s : specs) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("bound must look like name=value: " + s);
    std::string key = s.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(s.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bound value is not a number: " + s);
    }
    auto& sk = b.endgame.skeletal;
    if (key == "trail-edges") b.endgame.max_trail_edges = static_cast<int>(value);
    else if (key == "join-edges") b.endgame.max_join_edges = static_cast<int>(value);
    else if (key == "skeletal-vertices") sk.max_vertices = static_cast<int>(value);
    else if (key == "skeletal-hyperedges") sk.max_hyperedges = static_cast<int>(value);
    else if (key == "node-budget") sk.node_budget = value;
    else if (key == "switch-depth") sk.switch_depth = static_cast<int>(value);
    else if (key == "min-classes") sk.min_classes = static_cast<int>(value);
    else if (key == "line-vertices") b.max_line_vertices = static_cast<int>(value);
    else throw UsageError("unknown bound: " + key);
  }
  return b;
}

void emit(const Common& c, const Json& report) {
  if (c.json_out.empty()) return;
  if (c.json_out == "-") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  std::ofstream out(c.json_out);
  if (!out) throw UsageError("cannot write " + c.json_out);
  out << report.dump(2) << "\n";
}

Json instance_json(const Multigraph& g, const std::string& name) {
  return {{"name", name}, {"graph", to_json(g)}, {"graph_hash", graph_hash(g)}};
}

void print_verdicts(const std::vector<Verdict>& vs) {
  for (const auto& v : vs) {
    text() << "  " << (v.applicable ? (v.passed ? "pass" : "FAIL") : "n/a ") << "  " << v.checker;
    if (!v.witness.empty()) text() << "  (" << v.witness << ")";
    text() << "\n";
  }
}

Json verdicts_json(const std::vector<Verdict>& vs, const std::string& inputs) {
  Json a = Json::array();
  for (const auto& v : vs) {
    Json j = to_json(v);
    j["inputs"] = inputs;
    a.push_back(j);
  }
  return a;
}

bool all_ok(const std::vector<Verdict>& vs) {
  return std::all_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.ok(); });
}

int cmd_profile(const Common& c) {
  parse_bounds(c.bounds);
  Multigraph g = load_graph(c);
  LineProfile p = line_profile(g);
  text() << "edges " << p.edges << "\n"
            << "edge connectivity " << p.edge_connectivity.to_string() << "\n"
            << "essential edge connectivity " << p.essential.to_string() << "\n"
            << "2-essential edge connectivity " << p.two_essential.to_string() << "\n"
            << "line graph connectivity " << p.line_connectivity << "\n"
            << "line graph essential connectivity " << p.line_essential << "\n"
            << "qualifying " << (p.qualifying ? "yes" : "no") << "\n";
  emit(c, finalize_report({{"instance", instance_json(g, c.input)}, {"profile", to_json(p)}}, "profile"));
  return kExitPass;
}

int cmd_reduce(const Common& c, std::optional<int> e1, std::optional<int> e2) {
  parse_bounds(c.bounds);
  Multigraph g = load_graph(c);
  Reduction r = reduce(g, CorePolicy::Lenient, c.seed);
  text() << "core: " << r.core.core.num_vertices() << " vertices, " << r.core.core.num_edges() << " edges"
            << (r.core.hypothesis_ok ? "" : " (hypothesis fails)") << "\n";
  for (const auto& line : r.core.log) text() << "  " << line << "\n";
  text() << "W: " << r.hyper.w.size() << " temporary vertices\n";
  text() << "H0:\n" << write_hypergraph(r.hyper.h0);
  Json body = {{"instance", instance_json(g, c.input)}, {"core", to_json(r.core)}, {"h0", to_json(r.hyper)}};
  if (e1 && e2) {
    AnchoredHypergraph an = build_he(g, r.core, r.hyper, *e1, *e2);
    text() << "He (a1=" << an.a1 << ", a2=" << an.a2 << "):\n" << write_hypergraph(an.he);
    body["he"] = to_json(an);
  }
  emit(c, finalize_report(body, "reduce"));
  return kExitPass;
}

int cmd_skeletal(const Common& c, bool from_graph, std::optional<int> e1, std::optional<int> e2) {
  Bounds b = parse_bounds(c.bounds);
  Hypergraph3 h;
  if (from_graph) {
    if (!e1 || !e2) throw UsageError("--from-graph needs --e1 and --e2");
    Multigraph g = load_graph(c);
    Reduction r = reduce(g, CorePolicy::Strict, c.seed);
    h = build_he(g, r.core, r.hyper, *e1, *e2).he;
  } else {
    h = read_hypergraph_string(slurp(c.input));
  }
  SkeletalWitness w = skeletal_search(h, b.endgame.skeletal);
  bool ok = verify_witness(h, w, b.endgame.skeletal.mode);
  text() << "classes " << w.partition.size() << ", switches " << w.switches.size() << ", nodes " << w.nodes
            << ", verified " << (ok ? "yes" : "no") << "\n";
  for (const auto& line : w.transcript) text() << "  " << line << "\n";
  emit(c, finalize_report({{"hypergraph", write_hypergraph(h)}, {"witness", to_json(w)}, {"verified", ok}},
                          "skeletal"));
  return ok ? kExitPass : kExitFail;
}

int cmd_trail(const Common& c, int e1, int e2) {
  Bounds b = parse_bounds(c.bounds);
  Multigraph g = load_graph(c);
  Reduction r = reduce(g, CorePolicy::Strict, c.seed);
  EndgameResult res = endgame(g, r, e1, e2, b.endgame);
  for (const auto& line : res.transcript) text() << line << "\n";
  text() << "trail " << to_json(res.trail).dump() << "\n";
  emit(c, finalize_report({{"instance", instance_json(g, c.input)}, {"endgame", to_json(res)}}, "trail"));
  return res.verified ? kExitPass : kExitFail;
}

int cmd_certify(const Common& c, std::optional<int> e1, std::optional<int> e2) {
  Bounds b = parse_bounds(c.bounds);
  Multigraph g = load_graph(c);
  LineProfile p = line_profile(g);
  if (!p.qualifying) text() << "warning: instance does not meet the hypotheses\n";
  Reduction r = reduce(g, CorePolicy::Strict, c.seed);
  const std::string inputs = graph_hash(g);
  std::vector<Verdict> instance_verdicts;
  CoreProperties cp = check_core_properties(r.core);
  instance_verdicts.push_back({"core.properties", true, cp.all(), cp.all() ? "" : "core lost a connectivity property"});
  instance_verdicts.push_back({"lemma.permanent", true, check_lemma_permanent(g, r.core, r.hyper), ""});
  instance_verdicts.push_back(check_lemma_path(r.core, r.hyper));
  text() << "instance:\n";
  print_verdicts(instance_verdicts);
  Json pairs = Json::array();
  std::map<std::string, int> failures;
  int total = 0, passed = 0;
  for (EdgeId a = 0; a < g.num_edges(); ++a)
    for (EdgeId bb = 0; bb < g.num_edges(); ++bb) {
      if (a == bb || (e1 && a != *e1) || (e2 && bb != *e2)) continue;
      PairCertificate pc = certify_pair(g, r, a, bb, b.endgame);
      ++total;
      if (pc.ok()) ++passed;
      for (const auto& v : pc.verdicts)
        if (!v.ok()) ++failures[v.checker];
      Json j = to_json(pc);
      j["e1"] = a;
      j["e2"] = bb;
      j["verdicts"] = verdicts_json(pc.verdicts, inputs);
      pairs.push_back(j);
    }
  text() << "pairs: " << passed << "/" << total << " certified\n";
  for (const auto& [checker, n] : failures) text() << "  FAIL " << checker << " on " << n << " pairs\n";
  bool ok = all_ok(instance_verdicts) && passed == total;
  emit(c, finalize_report({{"instance", instance_json(g, c.input)},
                           {"profile", to_json(p)},
                           {"verdicts", verdicts_json(instance_verdicts, inputs)},
                           {"pairs", pairs},
                           {"ok", ok}},
                          "certify"));
  return ok ? kExitPass : kExitFail;
}

int cmd_hamcheck(const Common& c) {
  Bounds b = parse_bounds(c.bounds);
  Multigraph g = load_graph(c);
  if (g.num_edges() > b.max_line_vertices)
    throw UsageError("line graph has " + std::to_string(g.num_edges()) + " vertices, above the DP bound " +
                     std::to_string(b.max_line_vertices));
  PreimageCheck pc = crosscheck_preimage(g);
  text() << "L(G) Hamilton-connected: " << (pc.line_ham_connected ? "yes" : "no") << "\n"
            << "all pairs have internally dominating trails: " << (pc.all_pairs_have_trails ? "yes" : "no") << "\n"
            << "agreement: " << (pc.agree() ? "yes" : "NO") << "\n";
  Json body = {{"instance", instance_json(g, c.input)},
               {"line_ham_connected", pc.line_ham_connected},
               {"all_pairs_have_trails", pc.all_pairs_have_trails},
               {"agree", pc.agree()}};
  if (pc.failing_pair) body["failing_pair"] = {pc.failing_pair->first, pc.failing_pair->second};
  emit(c, finalize_report(body, "hamcheck"));
  return pc.agree() ? kExitPass : kExitFail;
}

int cmd_fig1b(const Common& c, int q) {
  Multigraph g = gen_fig1b(q);
  LineProfile p = line_profile(g);
  text() << "fig1b q=" << q << ": " << g.num_vertices() << " vertices, " << g.num_edges() << " edges\n"
            << "L(G) connectivity " << p.line_connectivity << ", essential connectivity " << p.line_essential << "\n";
  Json body = {{"instance", instance_json(g, "fig1b q=" + std::to_string(q))}, {"profile", to_json(p)}};
  bool ok = p.line_connectivity == 2;
  if (g.num_edges() <= 24) {
    bool path = ham_path_exists(line_graph(g));
    text() << "L(G) has a Hamilton path: " << (path ? "yes" : "no") << "\n";
    body["line_ham_path"] = path;
    ok = ok && !path;
  } else {
    text() << "Hamilton path check skipped: line graph above the exact DP bound\n";
    body["line_ham_path"] = nullptr;
  }
  body["ok"] = ok;
  emit(c, finalize_report(body, "counterexample"));
  return ok ? kExitPass : kExitFail;
}

int cmd_sweep(const Common& c, const std::string& suite, int budget) {
  Bounds b = parse_bounds(c.bounds);
  Json rows = Json::array();
  bool ok = true;
  if (suite == "qualifying") {
    for (const auto& [name, g] : find_qualifying_instances(budget)) {
      Reduction r = reduce(g);
      int total = 0, good = 0;
      std::map<std::string, int> routes;
      for (EdgeId a = 0; a < g.num_edges(); ++a)
        for (EdgeId bb = 0; bb < g.num_edges(); ++bb) {
          if (a == bb) continue;
          PairCertificate pc = certify_pair(g, r, a, bb, b.endgame);
          ++total;
          good += pc.ok() ? 1 : 0;
          ++routes[to_string(pc.endgame.route)];
        }
      text() << name << ": " << good << "/" << total << " pairs certified\n";
      rows.push_back({{"name", name}, {"graph_hash", graph_hash(g)}, {"pairs", total}, {"certified", good},
                      {"routes", routes}});
      ok = ok && good == total;
    }
  } else if (suite == "preimage") {
    int count = 0, agree = 0;
    for (const auto& g : enumerate_multigraphs(2 * budget, budget, 0)) {
      if (g.num_edges() < 3) continue;
      ++count;
      agree += crosscheck_preimage(g).agree() ? 1 : 0;
    }
    text() << "preimage agreement " << agree << "/" << count << " multigraphs with at most " << budget << " edges\n";
    rows.push_back({{"suite", suite}, {"graphs", count}, {"agree", agree}});
    ok = agree == count;
  } else {
    throw UsageError("unknown sweep suite: " + suite);
  }
  emit(c, finalize_report({{"suite", suite}, {"rows", rows}, {"ok", ok}}, "sweep"));
  return ok ? kExitPass : kExitFail;
}

void add_common(CLI::App* app, Common& c, bool with_input = true) {
  if (with_input) app->add_option("input", c.input, "Input file, '-' for stdin")->required();
  app->add_option("--format", c.format, "graph6, sparse6, edgelist or auto")
      ->check(CLI::IsMember({"auto", "graph6", "sparse6", "edgelist"}));
  app->add_option("--json", c.json_out, "Write the JSON report to this file ('-' for stdout)");
  app->add_option("--seed", c.seed, "Seed for the order in which W is selected");
  app->add_option("--bound", c.bounds, "Desk-scale cap, name=value (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string_view(argv[i]) == "--json" && std::string_view(argv[i + 1]) == "-") g_quiet = true;
  CLI::App app{"Verification toolkit for Hamilton-connected line graphs"};
  app.require_subcommand(1);
  Common c;
  std::optional<int> e1, e2;
  int q = 1, budget = 100;
  bool from_graph = false;
  std::string suite;

  auto* profile = app.add_subcommand("profile", "Connectivity profile of G and L(G)");
  add_common(profile, c);
  auto* red = app.add_subcommand("reduce", "Core, H0 and optionally He");
  add_common(red, c);
  red->add_option("--e1", e1);
  red->add_option("--e2", e2);
  auto* skel = app.add_subcommand("skeletal", "Skeletal witness search on a hypergraph file");
  add_common(skel, c);
  skel->add_flag("--from-graph", from_graph, "Read a graph and search on He for --e1/--e2");
  skel->add_option("--e1", e1);
  skel->add_option("--e2", e2);
  auto* cert = app.add_subcommand("certify", "Endgame plus all certificates for every edge pair");
  add_common(cert, c);
  cert->add_option("--e1", e1);
  cert->add_option("--e2", e2);
  auto* trail = app.add_subcommand("trail", "Internally dominating (e1,e2)-trail via the endgame");
  add_common(trail, c);
  trail->add_option("--e1", e1)->required();
  trail->add_option("--e2", e2)->required();
  auto* ham = app.add_subcommand("hamcheck", "Both sides of the trail characterisation");
  add_common(ham, c);
  auto* cex = app.add_subcommand("counterexample", "Build and check a known counterexample family");
  cex->require_subcommand(1);
  auto* fig = cex->add_subcommand("fig1b", "K4 with every edge replaced by q paths of length 3");
  add_common(fig, c, false);
  fig->add_option("--q", q, "Odd number of paths per edge");
  auto* sweep = app.add_subcommand("sweep", "Batch suites");
  add_common(sweep, c, false);
  sweep->add_option("suite", suite, "qualifying or preimage")->required();
  sweep->add_option("--budget", budget, "Instance budget (qualifying) or edge bound (preimage)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*profile) return cmd_profile(c);
    if (*red) return cmd_reduce(c, e1, e2);
    if (*skel) return cmd_skeletal(c, from_graph, e1, e2);
    if (*cert) return cmd_certify(c, e1, e2);
    if (*trail) return cmd_trail(c, *e1, *e2);
    if (*ham) return cmd_hamcheck(c);
    if (*fig) return cmd_fig1b(c, q);
    if (*sweep) return cmd_sweep(c, suite, budget);
  } catch (const UsageError& e) {
    std::cerr << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  } catch (const FormatError& e) {
    std::cerr << Json{{"error", "format"}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  } catch (const SearchExhausted& e) {
    std::cerr << Json{{"error", "search exhausted"}, {"message", e.what()}}.dump() << "\n";
    return kExitFail;
  } catch (const GraphError& e) {
    std::cerr << Json{{"error", "bounds"}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
