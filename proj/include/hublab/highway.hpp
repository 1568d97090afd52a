#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hublab/center_graph.hpp"
#include "hublab/graph.hpp"
#include "hublab/greedy_hhl.hpp"
#include "hublab/labeling.hpp"

namespace hublab {

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

/// One way of extending a path by at most one vertex at each end into a
/// shortest path longer than the threshold.
struct Witness {
  std::optional<Vertex> front;
  std::optional<Vertex> back;
  Length length = 0;
};

/// A shortest path (stored once per unordered endpoint pair, first vertex <=
/// last vertex) together with all its witnesses for the threshold it was
/// enumerated with.
struct SignificantPath {
  std::vector<Vertex> vertices;
  Length length = 0;
  std::vector<Witness> witnesses;
};

/// Distance from `v` to the nearest vertex of the witness path.
Distance distance_to_witness(const DistMatrix& d, Vertex v, const SignificantPath& p,
                             const Witness& w);

/// Every r-significant shortest path of an undirected graph. Throws
/// DirectedInput, and CapExceeded once more than `cap` shortest paths had to
/// be examined.
std::vector<SignificantPath> enumerate_significant_paths(const Graph& g, const DistMatrix& d,
                                                         const Rational& r,
                                                         std::size_t cap = kDefaultPathCap);

/// S_r(v): r-significant paths with a witness within distance 2r of `v`.
std::vector<SignificantPath> neighborhood_S(const Graph& g, const DistMatrix& d, Vertex v,
                                            const Rational& r,
                                            std::size_t cap = kDefaultPathCap);

/// Same filter applied to an already enumerated P_r.
std::vector<SignificantPath> neighborhood_S(const std::vector<SignificantPath>& significant,
                                            const DistMatrix& d, Vertex v, const Rational& r);

/// Vertices within distance at most r of v, sorted.
std::vector<Vertex> ball(const DistMatrix& d, Vertex v, const Rational& r);

/// Max over v of |B_radius(v) ∩ c|.
std::size_t max_ball_intersection(const DistMatrix& d, const std::vector<Vertex>& c,
                                  const Rational& radius);

/// `c` hits every r-significant path and no ball of radius 2r holds more
/// than h of its vertices.
bool is_sphs(const Graph& g, const DistMatrix& d, const std::vector<Vertex>& c, std::size_t h,
             const Rational& r, std::size_t cap = kDefaultPathCap);

struct MultiscaleSphs {
  /// levels[i] is C_i, sorted; levels[0] is every vertex.
  std::vector<std::vector<Vertex>> levels;
  /// ball_caps[i] = max_v |C_i ∩ B_{2^i}(v)|.
  std::vector<std::size_t> ball_caps;

  /// Q_i = C_i minus every higher level.
  std::vector<std::vector<Vertex>> exclusive_levels() const;
  /// 1 + sum of ball caps: the per-label bound of the derived labeling.
  std::size_t label_bound() const;
};

/// C_0 = V and, for i = 1..ceil(log2 D), a greedy hitting set of the
/// 2^(i-1)-significant paths. Requires an undirected graph with lengths >= 1.
MultiscaleSphs greedy_multiscale_sphs(const Graph& g, const DistMatrix& d,
                                      std::size_t cap = kDefaultPathCap);

struct SphsLabeling {
  Order order;
  Labeling labeling;
};

/// Hierarchical labeling from a multiscale SPHS: higher exclusive levels are
/// more important (ties by id) and L(v) = {v} ∪ {w more important than v :
/// w ∈ C_j ∩ B_{2^j}(v) for some j}. Throws InvalidSPHS if a level fails to
/// hit its significant paths or C_0 != V.
SphsLabeling sphs_to_hhl(const Graph& g, const DistMatrix& d, const MultiscaleSphs& ms,
                         std::size_t cap = kDefaultPathCap);

struct LevelAudit {
  /// hubs_per_level[v] maps level slot (0 = -inf, i + 1 = level i) to the
  /// number of hubs v received from iterations of that level.
  std::vector<std::vector<std::size_t>> hubs_per_level;
  std::vector<std::size_t> label_sizes;
  std::size_t max_count = 0;
  std::size_t max_label_size = 0;
  /// max_count / (max(h, 1) * log2(n + 1)).
  double ratio = 0.0;
};

/// Per-vertex, per-level hub counts of a d-HHL run.
LevelAudit audit_dhhl_levels(const RunTrace& trace, const DistMatrix& d, std::size_t h);

}  // namespace hublab
