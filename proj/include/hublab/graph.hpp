#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hublab {

using Vertex = std::uint32_t;
using Length = std::int64_t;

/// Shortest-path distance with a dedicated "unreachable" state.
///
/// Adding anything to an unreachable distance stays unreachable, and
/// unreachable compares greater than every finite distance.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(Length value) : value_(value) {}

  static constexpr Distance infinity() { return Distance(); }

  constexpr bool is_finite() const { return value_ >= 0; }
  constexpr Length value() const { return value_; }

  friend constexpr Distance operator+(Distance a, Distance b) {
    if (!a.is_finite() || !b.is_finite()) return Distance();
    return Distance(a.value_ + b.value_);
  }
  friend constexpr bool operator==(Distance a, Distance b) = default;
  friend constexpr std::strong_ordering operator<=>(Distance a, Distance b) {
    if (a.is_finite() != b.is_finite()) {
      return a.is_finite() ? std::strong_ordering::less
                           : std::strong_ordering::greater;
    }
    return a.value_ <=> b.value_;
  }

 private:
  Length value_ = -1;
};

std::string to_string(Distance d);

struct Arc {
  Vertex tail;
  Vertex head;
  Length length;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Weighted graph with vertices 0..n-1.
///
/// Undirected graphs store every edge once with tail < head. Parallel arcs
/// collapse to the minimum length; self-loops and negative lengths are
/// rejected, and so is any arc that would close a zero-length cycle.
class Graph {
 public:
  struct Neighbor {
    Vertex vertex;
    Length length;
  };

  Graph() = default;
  Graph(bool directed, std::size_t n);

  bool directed() const { return directed_; }
  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_arcs() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  /// Out-neighbors (directed) or all neighbors (undirected).
  const std::vector<Neighbor>& neighbors(Vertex v) const { return adjacency_[v]; }

  /// Length of the arc (or edge) between the two vertices, if present.
  std::optional<Length> arc_length(Vertex tail, Vertex head) const;

  void add_arc(Vertex tail, Vertex head, Length length);

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.directed_ == b.directed_ && a.arcs_ == b.arcs_ &&
           a.num_vertices() == b.num_vertices();
  }

 private:
  std::pair<Vertex, Vertex> key(Vertex tail, Vertex head) const;
  bool zero_path_exists(Vertex from, Vertex to) const;
  void rebuild_adjacency();

  bool directed_ = false;
  std::vector<Arc> arcs_;
  std::map<std::pair<Vertex, Vertex>, std::size_t> arc_index_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Parses the line-based graph format:
///   p <directed|undirected> <n> <m>
///   a <tail> <head> <length>     (m times)
/// Lines starting with '#' and blank lines are ignored. Errors carry the
/// 1-based line number.
Graph parse_graph(std::string_view text);

std::string serialize_graph(const Graph& g,
                            const std::vector<std::string>& comments = {});

Graph read_graph_file(const std::string& path);

/// Ordered pair for directed graphs; for undirected graphs the canonical form
/// has first <= second.
struct VertexPair {
  Vertex first;
  Vertex second;

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// All-pairs distance table.
class DistMatrix {
 public:
  DistMatrix() = default;
  DistMatrix(bool directed, std::size_t n);

  bool directed() const { return directed_; }
  std::size_t num_vertices() const { return n_; }

  Distance at(Vertex from, Vertex to) const { return dist_[from * n_ + to]; }
  void set(Vertex from, Vertex to, Distance d);

  /// Largest finite distance (0 for an edgeless graph).
  Length diameter() const { return diameter_; }

  bool reachable(Vertex from, Vertex to) const { return at(from, to).is_finite(); }

  /// Canonical pair form: identity for directed graphs, sorted otherwise.
  VertexPair canonical(Vertex u, Vertex w) const;

 private:
  bool directed_ = false;
  std::size_t n_ = 0;
  std::vector<Distance> dist_;
  Length diameter_ = 0;
};

/// Exact distances by one label-setting search per source.
DistMatrix all_pairs_distances(const Graph& g);

/// True iff v lies on some shortest path from u to w.
bool on_shortest_path(const DistMatrix& d, Vertex u, Vertex w, Vertex v);

/// All vertices lying on shortest u-w paths, sorted by id.
/// Throws UnreachablePair when w is not reachable from u.
std::vector<Vertex> shortest_path_vertices(const DistMatrix& d, Vertex u, Vertex w);

/// The same graph with every arc made two-way (parallel arcs collapse).
Graph undirected_version(const Graph& g);

}  // namespace hublab
