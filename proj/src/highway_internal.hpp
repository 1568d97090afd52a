#pragma once

#include <cstddef>
#include <vector>

#include "hublab/highway.hpp"

namespace hublab::detail {

/// Every shortest path (one orientation per endpoint pair, trivial paths
/// included) with all of its witnesses, whatever their length.
std::vector<SignificantPath> enumerate_shortest_paths(const Graph& g, const DistMatrix& d,
                                                      std::size_t cap);

/// Paths keeping only the witnesses longer than r; paths left without any
/// witness are dropped.
std::vector<SignificantPath> significant_subset(const std::vector<SignificantPath>& all,
                                                const Rational& r);

}  // namespace hublab::detail
