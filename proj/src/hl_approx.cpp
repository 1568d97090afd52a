#include "hublab/hl_approx.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <optional>

#include "hublab/error.hpp"

namespace hublab {

namespace {

// Center graph re-indexed as a plain graph on "side occurrences": X-side
// vertices first, then Y-side vertices (directed), or just the endpoints.
struct NodeGraph {
  std::vector<Vertex> vertex;      // node -> graph vertex
  std::vector<char> on_y;          // node -> belongs to Y side
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // a <= b; a == b is a self-loop
};

NodeGraph to_node_graph(const CenterGraph& cg) {
  NodeGraph g;
  std::vector<Vertex> xs = cg.x_side();
  std::vector<Vertex> ys = cg.y_side();
  for (Vertex v : xs) {
    g.vertex.push_back(v);
    g.on_y.push_back(0);
  }
  for (Vertex v : ys) {
    g.vertex.push_back(v);
    g.on_y.push_back(1);
  }
  auto x_node = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin());
  };
  auto y_node = [&](Vertex v) {
    return xs.size() +
           static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), v) - ys.begin());
  };
  for (const auto& e : cg.edges) {
    std::size_t a = x_node(e.first);
    std::size_t b = cg.directed ? y_node(e.second) : x_node(e.second);
    if (b < a) std::swap(a, b);
    g.edges.push_back({a, b});
  }
  return g;
}

MdsResult make_result(const NodeGraph& g, const std::vector<char>& keep, Rational density) {
  MdsResult r;
  r.density = density;
  for (std::size_t i = 0; i < g.vertex.size(); ++i) {
    if (!keep[i]) continue;
    (g.on_y[i] ? r.y_side : r.x_side).push_back(g.vertex[i]);
  }
  return r;
}

Rational ratio(std::size_t edges, std::size_t nodes) {
  return Rational(static_cast<std::int64_t>(edges), static_cast<std::int64_t>(nodes));
}

}  // namespace

MdsResult mds_peel(const CenterGraph& cg) {
  if (cg.edges.empty()) {
    throw Error(ErrorCode::EmptyCenterGraph, "center graph of " + std::to_string(cg.center));
  }
  const NodeGraph g = to_node_graph(cg);
  const std::size_t nodes = g.vertex.size();
  std::vector<std::vector<std::size_t>> incident(nodes);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].first].push_back(e);
    if (g.edges[e].second != g.edges[e].first) incident[g.edges[e].second].push_back(e);
  }
  std::vector<std::size_t> degree(nodes);
  for (std::size_t i = 0; i < nodes; ++i) degree[i] = incident[i].size();

  std::vector<char> alive(nodes, 1), edge_alive(g.edges.size(), 1);
  std::size_t live_nodes = nodes;
  std::size_t live_edges = g.edges.size();
  Rational best = ratio(live_edges, live_nodes);
  std::vector<char> best_keep = alive;

  while (live_nodes > 1) {
    std::size_t victim = nodes;
    for (std::size_t i = 0; i < nodes; ++i) {
      if (alive[i] && (victim == nodes || degree[i] < degree[victim])) victim = i;
    }
    alive[victim] = 0;
    --live_nodes;
    for (std::size_t e : incident[victim]) {
      if (!edge_alive[e]) continue;
      edge_alive[e] = 0;
      --live_edges;
      const auto [a, b] = g.edges[e];
      const std::size_t other = a == victim ? b : a;
      if (other != victim) --degree[other];
    }
    degree[victim] = 0;
    Rational current = ratio(live_edges, live_nodes);
    if (current > best) {
      best = current;
      best_keep = alive;
    }
  }
  return make_result(g, best_keep, best);
}

MdsResult exact_mds(const CenterGraph& cg, std::size_t limit) {
  if (cg.edges.empty()) {
    throw Error(ErrorCode::EmptyCenterGraph, "center graph of " + std::to_string(cg.center));
  }
  const NodeGraph g = to_node_graph(cg);
  const std::size_t nodes = g.vertex.size();
  if (nodes > limit || nodes > 30) {
    throw Error(ErrorCode::TooLarge, std::to_string(nodes) + " vertices in center graph");
  }
  // upper[a] has bit b set for each edge (a, b) with a <= b.
  std::vector<std::uint32_t> upper(nodes, 0);
  for (const auto& [a, b] : g.edges) upper[a] |= std::uint32_t{1} << b;

  auto as_list = [&](std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes; ++i) {
      if (mask >> i & 1u) out.push_back(i);
    }
    return out;
  };

  std::uint32_t best_mask = 0;
  Rational best(0);
  const std::uint32_t full = nodes == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << nodes) - 1;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    std::size_t edges = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      edges += static_cast<std::size_t>(std::popcount(upper[i] & mask));
    }
    if (edges == 0) continue;
    Rational d = ratio(edges, static_cast<std::size_t>(std::popcount(mask)));
    if (best_mask == 0 || d > best || (d == best && as_list(mask) < as_list(best_mask))) {
      best = d;
      best_mask = mask;
    }
  }
  std::vector<char> keep(nodes, 0);
  for (std::size_t i = 0; i < nodes; ++i) keep[i] = (best_mask >> i) & 1u;
  return make_result(g, keep, best);
}

CohenResult run_cohen_hl(const DistMatrix& d, const UncoveredSet& targets, bool use_exact_mds) {
  const std::size_t n = d.num_vertices();
  UncoveredSet uncovered = targets;
  Labeling labels(d.directed(), n);
  RunTrace trace;
  trace.algorithm = TraceAlgorithm::Cohen;
  trace.num_vertices = n;

  while (!uncovered.empty()) {
    std::optional<Vertex> best_v;
    MdsResult best;
    CenterGraph best_cg;
    for (Vertex v = 0; v < n; ++v) {
      CenterGraph cg = build_center_graph(d, uncovered, v);
      if (cg.edges.empty()) continue;
      MdsResult r = use_exact_mds ? exact_mds(cg) : mds_peel(cg);
      if (!best_v || r.density > best.density) {
        best_v = v;
        best = std::move(r);
        best_cg = std::move(cg);
      }
    }
    assert(best_v);
    if (!best_v) break;
    const Vertex v = *best_v;

    IterationRecord rec;
    rec.chosen = v;
    rec.density = best.density;
    rec.uncovered_before = uncovered.count();
    for (Vertex u : best.x_side) {
      if (labels.add_hub(Side::Forward, u, v, d.at(u, v).value())) {
        rec.added.push_back({u, Side::Forward});
      }
    }
    for (Vertex w : best.y_side) {
      if (labels.add_hub(Side::Backward, w, v, d.at(v, w).value())) {
        rec.added.push_back({w, Side::Backward});
      }
    }
    std::sort(rec.added.begin(), rec.added.end());

    for (const VertexPair& p : best_cg.edges) {
      if (labels.contains(Side::Forward, p.first, v) &&
          labels.contains(Side::Backward, p.second, v)) {
        uncovered.erase(p.first, p.second);
        rec.profile.add(pair_level(d.at(p.first, p.second).value()), 1);
        ++rec.edge_count;
      }
    }
    // The chosen subgraph has at least one edge, and all its pairs were
    // uncovered, so every step makes progress.
    assert(rec.edge_count > 0);
    if (rec.edge_count == 0) throw std::logic_error("cohen step covered nothing");
    rec.uncovered_after = uncovered.count();
    rec.uncovered_top_level = kLevelMinusInfinity;
    trace.iterations.push_back(std::move(rec));
  }
  return {std::move(labels), std::move(trace)};
}

}  // namespace hublab
