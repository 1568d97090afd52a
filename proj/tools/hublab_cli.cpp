// hublab: generate instances, build and verify hub labelings, compare
// algorithms against exact oracles.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hublab/center_graph.hpp"
#include "hublab/error.hpp"
#include "hublab/generators.hpp"
#include "hublab/graph.hpp"
#include "hublab/greedy_hhl.hpp"
#include "hublab/highway.hpp"
#include "hublab/hl_approx.hpp"
#include "hublab/labeling.hpp"
#include "hublab/oracles.hpp"

using namespace hublab;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Key-value lines followed by one JSON block.
class Report {
 public:
  template <typename T>
  void kv(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    lines_.emplace_back(key, s.str());
  }
  ordered_json& json() { return json_; }

  void write(std::ostream& out) const {
    for (const auto& [k, v] : lines_) out << k << ' ' << v << '\n';
    out << "begin-json\n" << json_.dump(2) << "\nend-json\n";
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
  ordered_json json_ = ordered_json::object();
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

ordered_json profile_json(const LevelProfile& p) {
  ordered_json out = ordered_json::object();
  if (p.at(kLevelMinusInfinity) > 0) out["-inf"] = p.at(kLevelMinusInfinity);
  for (int level = 0; level <= p.max_level_slot(); ++level) {
    if (p.at(level) > 0) out[std::to_string(level)] = p.at(level);
  }
  return out;
}

ordered_json trace_json(const RunTrace& trace) {
  ordered_json out;
  out["algorithm"] = to_string(trace.algorithm);
  out["num_vertices"] = trace.num_vertices;
  out["order"] = trace.order;
  ordered_json iters = ordered_json::array();
  for (const auto& rec : trace.iterations) {
    ordered_json it;
    it["chosen"] = rec.chosen;
    it["edge_count"] = rec.edge_count;
    it["density"] = to_string(rec.density);
    it["profile"] = profile_json(rec.profile);
    it["uncovered_top_level"] = level_to_string(rec.uncovered_top_level);
    ordered_json added = ordered_json::array();
    for (const auto& u : rec.added) {
      added.push_back({{"vertex", u.vertex}, {"side", u.side == Side::Forward ? "f" : "b"}});
    }
    it["added"] = std::move(added);
    it["uncovered_before"] = rec.uncovered_before;
    it["uncovered_after"] = rec.uncovered_after;
    iters.push_back(std::move(it));
  }
  out["iterations"] = std::move(iters);
  return out;
}

std::size_t max_label(const Labeling& l) {
  std::size_t best = 0;
  for (Vertex v = 0; v < l.num_vertices(); ++v) {
    best = std::max(best, l.forward(v).size());
    if (l.directed()) best = std::max(best, l.backward(v).size());
  }
  return best;
}

Order load_order(const std::string& path, std::size_t n) {
  return parse_order(read_text(path), n);
}

struct Built {
  Labeling labeling;
  std::optional<RunTrace> trace;
  std::optional<Order> order;
  ordered_json extra = ordered_json::object();
};

Built build_labeling(const Graph& g, const DistMatrix& d, const std::string& algo,
                     const std::string& order_path) {
  if (algo == "g-hhl" || algo == "w-hhl" || algo == "d-hhl") {
    GreedyResult r = algo == "g-hhl"   ? run_g_hhl(d)
                     : algo == "w-hhl" ? run_w_hhl(d)
                                       : run_d_hhl(d);
    return {std::move(r.labeling), std::move(r.trace), std::move(r.order), {}};
  }
  if (algo == "cohen") {
    CohenResult r = run_cohen_hl(d, initial_uncovered(d), false);
    return {std::move(r.labeling), std::move(r.trace), std::nullopt, {}};
  }
  if (algo == "canonical") {
    if (order_path.empty()) throw UsageError("--algo canonical needs --order");
    Order order = load_order(order_path, d.num_vertices());
    return {canonical_hhl(d, order), std::nullopt, order, {}};
  }
  if (algo == "sphs") {
    MultiscaleSphs ms = greedy_multiscale_sphs(g, d);
    SphsLabeling sl = sphs_to_hhl(g, d, ms);
    ordered_json extra;
    extra["levels"] = ms.levels;
    extra["ball_caps"] = ms.ball_caps;
    extra["label_bound"] = ms.label_bound();
    return {std::move(sl.labeling), std::nullopt, std::move(sl.order), std::move(extra)};
  }
  throw UsageError("unknown algorithm " + algo);
}

// generate -----------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::size_t k = 0;
  std::string graph;
  std::size_t n = 0;
  std::size_t m = 0;
  Length maxlen = 1;
  std::uint64_t seed = 1;
  bool directed = false;
  bool undirected = false;
  bool with_hl = false;
  std::string out;
};

int cmd_generate(const GenerateArgs& a) {
  const auto need_k = [&](std::size_t least) {
    if (a.k < least) throw UsageError(a.family + " needs --k >= " + std::to_string(least));
  };
  std::vector<std::string> header{"family " + a.family};
  Graph g(false, 0);
  std::optional<Labeling> labels;
  if (a.family == "bad-g") {
    need_k(1);
    g = gen_bad_g(a.k, !a.undirected);
    header.push_back("k " + std::to_string(a.k));
  } else if (a.family == "bad-w") {
    need_k(1);
    g = gen_bad_w(a.k);
    header.push_back("k " + std::to_string(a.k));
    header.push_back("l " + std::to_string(bad_w_l(a.k)));
  } else if (a.family == "separator") {
    need_k(2);
    g = gen_separator(a.k);
    header.push_back("k " + std::to_string(a.k));
    if (a.with_hl) labels = construct_separator_hl(a.k);
  } else if (a.family == "cycle4") {
    g = gen_cycle4(a.directed);
    header.push_back(a.directed ? "variant directed" : "variant undirected");
    if (a.with_hl && a.directed) labels = construct_c4prime_hl();
  } else if (a.family == "vc-und" || a.family == "vc-dir") {
    if (a.graph.empty()) throw UsageError(a.family + " needs --graph");
    const Graph base = parse_graph(read_text(a.graph));
    g = a.family == "vc-und" ? reduce_vc_undirected(base) : reduce_vc_directed(base);
    header.push_back("base " + a.graph);
    header.push_back("base_vertices " + std::to_string(base.num_vertices()));
    header.push_back("base_edges " + std::to_string(base.num_arcs()));
    if (a.with_hl) {
      const auto vc = min_vertex_cover(base);
      labels = a.family == "vc-und" ? construct_reduction_labeling_undirected(base, g, vc)
                                    : construct_reduction_labeling_directed(base, g, vc);
    }
  } else if (a.family == "random") {
    if (a.n == 0) throw UsageError("random needs --n");
    g = gen_random(a.n, a.m, a.maxlen, a.seed, a.directed);
    header.push_back("n " + std::to_string(a.n));
    header.push_back("m " + std::to_string(a.m));
    header.push_back("maxlen " + std::to_string(a.maxlen));
    header.push_back("seed " + std::to_string(a.seed));
  } else {
    throw UsageError("unknown family " + a.family);
  }
  if (a.with_hl && !labels) throw UsageError(a.family + " has no constructed labeling");
  if (labels && (a.out.empty() || a.out == "-")) throw UsageError("--with-hl needs --out");

  write_text(a.out, serialize_graph(g, header));
  if (labels) {
    write_text(a.out + ".lbl", serialize_labeling(*labels));
    std::cerr << "labels " << a.out << ".lbl size " << labeling_size(*labels) << '\n';
  }
  return kExitOk;
}

// build --------------------------------------------------------------------

int cmd_build(const std::string& graph_path, const std::string& algo,
              const std::string& order_path, const std::string& out) {
  const Graph g = read_graph_file(graph_path);
  const DistMatrix d = all_pairs_distances(g);
  Built b = build_labeling(g, d, algo, order_path);
  write_text(out, serialize_labeling(b.labeling));

  Report r;
  r.kv("command", "build");
  r.kv("algo", algo);
  r.kv("vertices", g.num_vertices());
  r.kv("size", labeling_size(b.labeling));
  r.kv("max_label", max_label(b.labeling));
  ordered_json& j = r.json();
  j["algo"] = algo;
  j["graph"] = graph_path;
  j["size"] = labeling_size(b.labeling);
  j["max_label"] = max_label(b.labeling);
  if (b.order) j["order"] = b.order->sequence();
  if (b.trace) j["trace"] = trace_json(*b.trace);
  if (!b.extra.empty()) j["sphs"] = b.extra;
  r.write(out.empty() || out == "-" ? std::cerr : std::cout);
  return kExitOk;
}

// verify -------------------------------------------------------------------

int cmd_verify(const std::string& graph_path, const std::string& label_path) {
  const Graph g = read_graph_file(graph_path);
  const Labeling l = read_labeling_file(label_path);
  if (l.num_vertices() != g.num_vertices() || l.directed() != g.directed()) {
    throw Error(ErrorCode::Mismatch, "labeling does not match graph");
  }
  const DistMatrix d = all_pairs_distances(g);
  const CoverReport cr = verify_cover(l, d);
  Report r;
  r.kv("command", "verify");
  r.kv("valid", cr.valid ? "true" : "false");
  r.kv("size", labeling_size(l));
  r.kv("violations", cr.violations.size());
  ordered_json v = ordered_json::array();
  for (const auto& p : cr.violations) v.push_back({p.first, p.second});
  r.json()["valid"] = cr.valid;
  r.json()["size"] = labeling_size(l);
  r.json()["violations"] = std::move(v);
  r.write(std::cout);
  return cr.valid ? kExitOk : kExitInvalid;
}

// compare ------------------------------------------------------------------

int cmd_compare(const std::string& graph_path, std::vector<std::string> algos,
                const std::string& order_path, bool oracle, std::uint64_t budget) {
  const Graph g = read_graph_file(graph_path);
  const DistMatrix d = all_pairs_distances(g);
  if (algos.empty()) algos = {"g-hhl", "w-hhl", "d-hhl", "cohen"};
  if (!order_path.empty()) algos.push_back("canonical");

  Report r;
  r.kv("command", "compare");
  r.kv("vertices", g.num_vertices());
  ordered_json rows = ordered_json::array();
  std::map<std::string, std::size_t> sizes;
  for (const auto& algo : algos) {
    Built b = build_labeling(g, d, algo, order_path);
    const std::size_t size = labeling_size(b.labeling);
    sizes[algo] = size;
    r.kv(algo, size);
    rows.push_back({{"algo", algo}, {"size", size}, {"max_label", max_label(b.labeling)}});
  }
  ordered_json& j = r.json();
  j["graph"] = graph_path;
  j["vertices"] = g.num_vertices();
  j["results"] = std::move(rows);

  if (oracle) {
    const OptimalHhl hhl = optimal_hhl_bruteforce(d);
    const OptimalHl hl = optimal_hl_bnb(d, initial_uncovered(d), budget);
    r.kv("optimal_hhl", hhl.size);
    r.kv("optimal_hl", hl.complete ? std::to_string(hl.upper)
                                   : std::to_string(hl.lower) + ".." + std::to_string(hl.upper));
    ordered_json o;
    o["optimal_hhl"] = hhl.size;
    o["optimal_hhl_order"] = hhl.order.sequence();
    o["optimal_hl_lower"] = hl.lower;
    o["optimal_hl_upper"] = hl.upper;
    o["optimal_hl_complete"] = hl.complete;
    o["search_nodes"] = hl.nodes;
    ordered_json ratios = ordered_json::object();
    for (const auto& [algo, size] : sizes) {
      const double ratio = static_cast<double>(size) / static_cast<double>(hhl.size);
      ratios[algo] = ratio;
      std::ostringstream s;
      s.precision(4);
      s << ratio;
      r.kv("ratio_" + algo, s.str());
    }
    o["ratio_to_optimal_hhl"] = std::move(ratios);
    j["oracle"] = std::move(o);
  }
  r.write(std::cout);
  return kExitOk;
}

// query --------------------------------------------------------------------

int cmd_query(const std::string& graph_path, const std::string& label_path, Vertex s, Vertex t) {
  const Graph g = read_graph_file(graph_path);
  const Labeling l = read_labeling_file(label_path);
  if (l.num_vertices() != g.num_vertices()) {
    throw Error(ErrorCode::Mismatch, "labeling does not match graph");
  }
  if (s >= l.num_vertices() || t >= l.num_vertices()) {
    throw UsageError("vertex id out of range");
  }
  const Distance dist = query(l, s, t);
  std::cout << (dist.is_finite() ? std::to_string(dist.value()) : std::string("unreachable"))
            << '\n';
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooLarge:
    case ErrorCode::CapExceeded:
      return kExitResource;
    default:
      return kExitInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hub labeling toolkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write an instance graph");
  generate->add_option("family", gen.family,
                       "bad-g, bad-w, separator, cycle4, vc-und, vc-dir, random")
      ->required();
  generate->add_option("--k", gen.k, "family parameter");
  generate->add_option("--graph", gen.graph, "base graph for vc-und and vc-dir");
  generate->add_option("--n", gen.n, "vertices (random)");
  generate->add_option("--m", gen.m, "edges (random)");
  generate->add_option("--maxlen", gen.maxlen, "largest edge length (random)");
  generate->add_option("--seed", gen.seed, "random seed");
  generate->add_flag("--directed", gen.directed, "directed variant (random, cycle4)");
  generate->add_flag("--undirected", gen.undirected, "undirected variant (bad-g)");
  generate->add_flag("--with-hl", gen.with_hl, "also write the constructed labeling to OUT.lbl");
  generate->add_option("--out", gen.out, "output path, stdout if omitted");

  std::string graph_path, label_path, algo, order_path, out;
  auto* build = app.add_subcommand("build", "build a labeling and a trace report");
  build->add_option("graph", graph_path)->required();
  build->add_option("--algo", algo, "g-hhl, w-hhl, d-hhl, cohen, canonical, sphs")->required();
  build->add_option("--order", order_path, "order file for canonical");
  build->add_option("--out", out, "label file, stdout if omitted");

  auto* verify = app.add_subcommand("verify", "check the cover property");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("labels", label_path)->required();

  std::vector<std::string> algos;
  bool oracle = false;
  std::uint64_t budget = 5'000'000;
  auto* compare = app.add_subcommand("compare", "compare labeling sizes");
  compare->add_option("graph", graph_path)->required();
  compare->add_option("--algo", algos, "algorithms to run");
  compare->add_option("--order", order_path, "also report the canonical labeling of this order");
  compare->add_flag("--oracle", oracle, "compute optimal HHL and HL sizes");
  compare->add_option("--budget", budget, "search node budget for optimal HL");

  Vertex s = 0, t = 0;
  auto* query_cmd = app.add_subcommand("query", "distance from the labels");
  query_cmd->add_option("graph", graph_path)->required();
  query_cmd->add_option("labels", label_path)->required();
  query_cmd->add_option("s", s)->required();
  query_cmd->add_option("t", t)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen);
    if (build->parsed()) return cmd_build(graph_path, algo, order_path, out);
    if (verify->parsed()) return cmd_verify(graph_path, label_path);
    if (compare->parsed()) return cmd_compare(graph_path, algos, order_path, oracle, budget);
    if (query_cmd->parsed()) return cmd_query(graph_path, label_path, s, t);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what();
    if (e.line()) std::cerr << " (line " << *e.line() << ')';
    std::cerr << '\n';
    return exit_code_for(e.code());
  }
  return kExitUsage;
}
