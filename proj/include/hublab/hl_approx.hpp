#pragma once

#include <vector>

#include "hublab/center_graph.hpp"
#include "hublab/greedy_hhl.hpp"
#include "hublab/labeling.hpp"

namespace hublab {

/// A subgraph of a center graph chosen by a densest-subgraph routine.
/// Directed: `x_side` = S' (forward-label owners), `y_side` = S'' (backward).
/// Undirected: `x_side` = S, `y_side` empty.
struct MdsResult {
  std::vector<Vertex> x_side;
  std::vector<Vertex> y_side;
  Rational density{0};
};

/// Peeling 2-approximation of the densest subgraph: repeatedly drop a
/// minimum-degree vertex (lowest id first, X side before Y side) and keep the
/// densest prefix, preferring the larger subgraph on equal density.
/// Throws EmptyCenterGraph.
MdsResult mds_peel(const CenterGraph& cg);

/// Exact densest subgraph by enumerating vertex subsets; ties go to the
/// lexicographically smallest vertex list. Throws TooLarge when the graph has
/// more than `limit` non-isolated side occurrences.
MdsResult exact_mds(const CenterGraph& cg, std::size_t limit = 20);

struct CohenResult {
  Labeling labeling;
  RunTrace trace;
};

/// Greedy set cover over center-graph subgraphs: each step adds one hub v to
/// L_f(S') and L_b(S'') maximizing newly covered pairs per added entry.
/// Covers exactly the pairs of `targets`; the result need not be
/// hierarchical.
CohenResult run_cohen_hl(const DistMatrix& d, const UncoveredSet& targets, bool use_exact_mds);

}  // namespace hublab
