#include "hublab/greedy_hhl.hpp"

#include <algorithm>
#include <cassert>
#include <optional>

#include "hublab/error.hpp"

namespace hublab {

const char* to_string(TraceAlgorithm algo) {
  switch (algo) {
    case TraceAlgorithm::GreedyEdges: return "g-hhl";
    case TraceAlgorithm::GreedyDensity: return "w-hhl";
    case TraceAlgorithm::GreedyDistance: return "d-hhl";
    case TraceAlgorithm::Cohen: return "cohen";
  }
  return "unknown";
}

std::string level_to_string(int level) {
  return level == kLevelMinusInfinity ? std::string("-inf") : std::to_string(level);
}

namespace {

// True iff candidate `a` beats the current best `b` under `algo`. Strict, so
// the lowest vertex id wins ties when candidates are scanned in id order.
bool better(TraceAlgorithm algo, const CenterGraphIndex& idx, Vertex a, Vertex b) {
  switch (algo) {
    case TraceAlgorithm::GreedyEdges:
      return idx.edge_count(a) > idx.edge_count(b);
    case TraceAlgorithm::GreedyDensity:
      return idx.density(a) > idx.density(b);
    case TraceAlgorithm::GreedyDistance:
      return idx.profile(a) > idx.profile(b);
    case TraceAlgorithm::Cohen:
      break;
  }
  assert(false && "not a hierarchical greedy algorithm");
  return false;
}

GreedyResult run_greedy(const DistMatrix& d, TraceAlgorithm algo) {
  const std::size_t n = d.num_vertices();
  CenterGraphIndex idx(d);
  Labeling labels(d.directed(), n);
  RunTrace trace;
  trace.algorithm = algo;
  trace.num_vertices = n;
  std::vector<char> chosen(n, 0);

  while (!idx.uncovered().empty()) {
    std::optional<Vertex> best;
    for (Vertex v = 0; v < n; ++v) {
      if (chosen[v] || idx.edge_count(v) == 0) continue;
      if (!best || better(algo, idx, v, *best)) best = v;
    }
    // [v,v] is only covered by v itself, so a non-empty U always leaves a
    // candidate with a non-empty center graph.
    assert(best);
    if (!best) break;
    const Vertex v = *best;

    IterationRecord rec;
    rec.chosen = v;
    rec.edge_count = idx.edge_count(v);
    rec.density = idx.density(v);
    rec.profile = idx.profile(v);
    rec.uncovered_top_level = idx.uncovered().empty() ? kLevelMinusInfinity
                                                      : idx.uncovered_profile().top_level();
    rec.uncovered_before = idx.uncovered().count();

    for (const VertexPair& p : idx.materialize(v).edges) {
      if (labels.add_hub(Side::Forward, p.first, v, d.at(p.first, v).value())) {
        rec.added.push_back({p.first, Side::Forward});
      }
      if (labels.add_hub(Side::Backward, p.second, v, d.at(v, p.second).value())) {
        rec.added.push_back({p.second, d.directed() ? Side::Backward : Side::Forward});
      }
      idx.cover(p.first, p.second);
    }
    std::sort(rec.added.begin(), rec.added.end());
    rec.uncovered_after = idx.uncovered().count();
    chosen[v] = 1;
    trace.order.push_back(v);
    trace.iterations.push_back(std::move(rec));
  }

  // Vertices whose center graphs emptied before selection go last, by id.
  for (Vertex v = 0; v < n; ++v) {
    if (!chosen[v]) trace.order.push_back(v);
  }
  Order order(trace.order);
  return {std::move(order), std::move(labels), std::move(trace)};
}

}  // namespace

GreedyResult run_g_hhl(const DistMatrix& d) { return run_greedy(d, TraceAlgorithm::GreedyEdges); }
GreedyResult run_w_hhl(const DistMatrix& d) { return run_greedy(d, TraceAlgorithm::GreedyDensity); }
GreedyResult run_d_hhl(const DistMatrix& d) {
  return run_greedy(d, TraceAlgorithm::GreedyDistance);
}

std::map<Vertex, int> vertex_levels(const RunTrace& trace) {
  if (trace.algorithm != TraceAlgorithm::GreedyDistance) {
    throw Error(ErrorCode::TraceNotFromDHHL,
                std::string("trace comes from ") + to_string(trace.algorithm));
  }
  std::map<Vertex, int> levels;
  for (const auto& rec : trace.iterations) levels[rec.chosen] = rec.uncovered_top_level;
  return levels;
}

}  // namespace hublab
