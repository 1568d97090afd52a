#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hublab/graph.hpp"

namespace hublab {

enum class Side { Forward, Backward };

struct HubEntry {
  Vertex hub;
  Length dist;

  friend bool operator==(const HubEntry&, const HubEntry&) = default;
  friend auto operator<=>(const HubEntry&, const HubEntry&) = default;
};

using Label = std::vector<HubEntry>;

/// Per-vertex hub lists, kept sorted by hub id.
///
/// Directed labelings hold a forward list L_f(v) (hubs reachable from v) and
/// a backward list L_b(v) (hubs reaching v). Undirected labelings hold a
/// single list per vertex; both sides alias it and each hub counts once.
class Labeling {
 public:
  Labeling() = default;
  Labeling(bool directed, std::size_t n);

  bool directed() const { return directed_; }
  std::size_t num_vertices() const { return forward_.size(); }

  const Label& label(Side side, Vertex v) const;
  const Label& forward(Vertex v) const { return label(Side::Forward, v); }
  const Label& backward(Vertex v) const { return label(Side::Backward, v); }

  /// Inserts (hub, dist); returns false if the hub was already present.
  bool add_hub(Side side, Vertex v, Vertex hub, Length dist);
  bool remove_hub(Side side, Vertex v, Vertex hub);
  bool contains(Side side, Vertex v, Vertex hub) const;

  /// Total number of hub entries.
  std::size_t size() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  Label& mutable_label(Side side, Vertex v);

  bool directed_ = false;
  std::vector<Label> forward_;
  std::vector<Label> backward_;
};

/// Global importance order; rank 0 is the most important vertex.
class Order {
 public:
  Order() = default;
  /// `sequence` lists vertices most important first and must be a permutation.
  explicit Order(std::vector<Vertex> sequence);

  static Order identity(std::size_t n);

  std::size_t size() const { return sequence_.size(); }
  std::size_t rank(Vertex v) const { return rank_[v]; }
  const std::vector<Vertex>& sequence() const { return sequence_; }

  bool more_important(Vertex a, Vertex b) const { return rank_[a] < rank_[b]; }

  friend bool operator==(const Order& a, const Order& b) { return a.sequence_ == b.sequence_; }

 private:
  std::vector<Vertex> sequence_;
  std::vector<std::size_t> rank_;
};

Order parse_order(std::string_view text, std::size_t n);
std::string serialize_order(const Order& order);

struct CoverReport {
  bool valid = true;
  std::vector<VertexPair> violations;
};

Distance query(const Labeling& l, Vertex s, Vertex t);

std::size_t labeling_size(const Labeling& l);

/// Checks every stored hub distance against `d` and the cover property for
/// every reachable pair. A wrong entry hub in L_f(v) is reported as the pair
/// [v, hub] (backward: [hub, v]).
CoverReport verify_cover(const Labeling& l, const DistMatrix& d);

/// Same, but the cover property is only required for `pairs`.
CoverReport verify_cover(const Labeling& l, const DistMatrix& d,
                         std::span<const VertexPair> pairs);

/// The canonical hierarchical labeling of `order`: u is a forward hub of v
/// iff u is the most important vertex on shortest v-u paths.
Labeling canonical_hhl(const DistMatrix& d, const Order& order);

bool respects_order(const Labeling& l, const Order& order);

/// Every entry of `a` appears, with the same distance, on the same side in `b`.
bool is_sublabeling(const Labeling& a, const Labeling& b);

/// Label file: `l <v> h:d ...` (undirected) or `f <v> ...` / `b <v> ...`.
std::string serialize_labeling(const Labeling& l);
Labeling parse_labeling(std::string_view text);
Labeling read_labeling_file(const std::string& path);

}  // namespace hublab
