#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hublab/graph.hpp"

namespace hublab {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

/// Pairs still waiting for a covering hub. Undirected pairs are unordered and
/// always looked up through their canonical form.
class UncoveredSet {
 public:
  UncoveredSet() = default;
  UncoveredSet(bool directed, std::size_t n);

  bool directed() const { return directed_; }
  std::size_t num_vertices() const { return n_; }
  std::size_t count() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex u, Vertex w) const { return bits_[index(u, w)] != 0; }
  bool insert(Vertex u, Vertex w);
  bool erase(Vertex u, Vertex w);

  /// Members in canonical form, sorted.
  std::vector<VertexPair> pairs() const;

  friend bool operator==(const UncoveredSet&, const UncoveredSet&) = default;

 private:
  std::size_t index(Vertex u, Vertex w) const {
    if (!directed_ && w < u) std::swap(u, w);
    return static_cast<std::size_t>(u) * n_ + w;
  }

  bool directed_ = false;
  std::size_t n_ = 0;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Every reachable pair: ordered pairs for directed graphs, unordered pairs
/// including [v,v] otherwise.
UncoveredSet initial_uncovered(const DistMatrix& d);

/// Level of a pair at distance `dist`: floor(log2 dist), or
/// kLevelMinusInfinity for dist == 0.
inline constexpr int kLevelMinusInfinity = std::numeric_limits<int>::min();
int pair_level(Length dist);

/// Number of center-graph edges per pair level. Compared lexicographically
/// from the highest level down, which orders center graphs exactly as the sum
/// of weights n^(2*level) would.
class LevelProfile {
 public:
  LevelProfile() = default;

  /// Count for `level` (kLevelMinusInfinity for distance-0 pairs).
  std::size_t at(int level) const;
  void add(int level, std::ptrdiff_t delta);

  std::size_t total() const;
  /// Highest level with a non-zero count; kLevelMinusInfinity if only
  /// distance-0 pairs (or nothing) remain.
  int top_level() const;
  /// Largest finite level slot in use, -1 if none.
  int max_level_slot() const { return static_cast<int>(counts_.size()) - 2; }

  friend bool operator==(const LevelProfile& a, const LevelProfile& b) {
    return (a <=> b) == 0;
  }
  friend std::strong_ordering operator<=>(const LevelProfile& a, const LevelProfile& b);

 private:
  static std::size_t slot(int level) {
    return level == kLevelMinusInfinity ? 0 : static_cast<std::size_t>(level) + 1;
  }
  // counts_[0] holds distance-0 pairs, counts_[i + 1] holds level i.
  std::vector<std::size_t> counts_;
};

/// Center graph G_v: one edge per uncovered pair with a shortest path through
/// the center. Directed graphs are bipartite (X = sources, Y = targets);
/// undirected graphs may contain the self-loop {v,v}.
struct CenterGraph {
  Vertex center = 0;
  bool directed = false;
  std::vector<VertexPair> edges;  // canonical, sorted

  std::size_t edge_count() const { return edges.size(); }
  /// Non-isolated side occurrences: |X'| + |Y'| when directed, number of
  /// distinct endpoints otherwise.
  std::size_t nonisolated_count() const;
  /// Distinct endpoints on the X side (directed) or all endpoints (undirected).
  std::vector<Vertex> x_side() const;
  /// Distinct endpoints on the Y side; empty for undirected graphs.
  std::vector<Vertex> y_side() const;
};

CenterGraph build_center_graph(const DistMatrix& d, const UncoveredSet& u, Vertex v);

/// edge_count / nonisolated_count. Throws EmptyCenterGraph.
Rational density(const CenterGraph& cg);

LevelProfile level_profile(const CenterGraph& cg, const DistMatrix& d);

/// Incrementally maintained center graphs of every vertex.
///
/// Only the quantities greedy selection needs are kept per center (edge
/// count, non-isolated count, level profile); full edge sets are rebuilt on
/// demand. Covering a pair removes its edge from the center graph of every
/// vertex on one of its shortest paths.
class CenterGraphIndex {
 public:
  CenterGraphIndex(const DistMatrix& d, UncoveredSet uncovered);
  explicit CenterGraphIndex(const DistMatrix& d);

  const UncoveredSet& uncovered() const { return uncovered_; }
  std::size_t num_vertices() const { return d_->num_vertices(); }

  std::size_t edge_count(Vertex v) const { return edges_[v]; }
  std::size_t nonisolated_count(Vertex v) const { return nonisolated_[v]; }
  Rational density(Vertex v) const;
  const LevelProfile& profile(Vertex v) const { return profiles_[v]; }
  /// Level profile of the whole uncovered set.
  const LevelProfile& uncovered_profile() const { return all_profile_; }

  CenterGraph materialize(Vertex v) const { return build_center_graph(*d_, uncovered_, v); }

  /// Removes [u,w] from the uncovered set; no-op if already covered.
  bool cover(Vertex u, Vertex w);

 private:
  void account(Vertex u, Vertex w, int sign);

  const DistMatrix* d_;
  UncoveredSet uncovered_;
  std::vector<std::size_t> edges_;
  std::vector<std::size_t> nonisolated_;
  std::vector<std::uint32_t> deg_x_;  // n x n, per center
  std::vector<std::uint32_t> deg_y_;  // n x n, per center (directed only)
  std::vector<LevelProfile> profiles_;
  LevelProfile all_profile_;
};

}  // namespace hublab
