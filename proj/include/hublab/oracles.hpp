#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hublab/center_graph.hpp"
#include "hublab/graph.hpp"
#include "hublab/hl_approx.hpp"
#include "hublab/labeling.hpp"

namespace hublab {

struct OptimalHhl {
  std::size_t size = 0;
  Order order;
};

/// Minimum canonical labeling size over all n! orders, with the first order
/// (in lexicographic enumeration) reaching it. Throws TooLarge above limit_n.
OptimalHhl optimal_hhl_bruteforce(const DistMatrix& d, std::size_t limit_n = 9);

/// Canonical labeling size of `order` without building the labeling.
std::size_t canonical_size(const DistMatrix& d, const Order& order);

struct OptimalHl {
  std::size_t lower = 0;
  std::size_t upper = 0;
  /// Best labeling found; optimal when `complete`.
  Labeling labeling;
  bool complete = false;
  std::uint64_t nodes = 0;
};

/// Branch and bound over the hub choice of each pair in `targets`. The search
/// is abandoned after `budget` nodes, leaving lower < upper in general.
OptimalHl optimal_hl_bnb(const DistMatrix& d, const UncoveredSet& targets,
                         std::uint64_t budget = 5'000'000);

/// Minimum vertex cover of an undirected graph, sorted. Throws DirectedInput.
std::vector<Vertex> min_vertex_cover(const Graph& g);

bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& cover);

/// Minimum hitting set of `sets`, sorted. Throws TooLarge for more than
/// `limit` sets or more than 64 distinct elements, InfeasibleParams for an
/// empty set.
std::vector<Vertex> min_hitting_set(const std::vector<std::vector<Vertex>>& sets,
                                    std::size_t limit = 1'000'000);

struct HighwayDimension {
  std::size_t h = 0;
  /// A vertex and threshold realizing h (meaningful when h > 0).
  Vertex vertex = 0;
  Rational r{0};
};

/// Max over v and every distinct threshold r of the minimum hitting set of
/// S_r(v). Thresholds tried: every distance and half distance, plus the
/// midpoints between consecutive ones. Throws DirectedInput and TooLarge.
HighwayDimension highway_dimension_bruteforce(const Graph& g, std::size_t limit_n = 24);

}  // namespace hublab
