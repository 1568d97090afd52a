#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hublab/center_graph.hpp"
#include "hublab/graph.hpp"
#include "hublab/labeling.hpp"

namespace hublab {

enum class TraceAlgorithm { GreedyEdges, GreedyDensity, GreedyDistance, Cohen };

const char* to_string(TraceAlgorithm algo);

struct LabelUpdate {
  Vertex vertex;
  Side side;

  friend bool operator==(const LabelUpdate&, const LabelUpdate&) = default;
  friend auto operator<=>(const LabelUpdate&, const LabelUpdate&) = default;
};

/// One selection step. Every score field is filled regardless of which one
/// drove the selection, so traces of different algorithms are comparable.
struct IterationRecord {
  Vertex chosen = 0;
  std::size_t edge_count = 0;
  Rational density{0};
  LevelProfile profile;
  /// Highest level among pairs uncovered when this iteration started.
  int uncovered_top_level = kLevelMinusInfinity;
  /// Labels that received `chosen` as a hub in this iteration.
  std::vector<LabelUpdate> added;
  std::size_t uncovered_before = 0;
  std::size_t uncovered_after = 0;
};

struct RunTrace {
  TraceAlgorithm algorithm = TraceAlgorithm::GreedyEdges;
  std::size_t num_vertices = 0;
  std::vector<IterationRecord> iterations;
  /// Final order; empty for non-hierarchical runs.
  std::vector<Vertex> order;
};

struct GreedyResult {
  Order order;
  Labeling labeling;
  RunTrace trace;
};

/// g-HHL: repeatedly takes the center graph with the most edges.
GreedyResult run_g_hhl(const DistMatrix& d);
/// w-HHL: highest density (edges over non-isolated vertices), exact rationals.
GreedyResult run_w_hhl(const DistMatrix& d);
/// d-HHL: largest level profile, compared from the top level down.
GreedyResult run_d_hhl(const DistMatrix& d);

/// Level of each selected vertex in a d-HHL trace (kLevelMinusInfinity when
/// only distance-0 pairs were left). Throws TraceNotFromDHHL otherwise.
std::map<Vertex, int> vertex_levels(const RunTrace& trace);

std::string level_to_string(int level);

}  // namespace hublab
