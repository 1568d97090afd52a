#include "hublab/center_graph.hpp"

#include <algorithm>
#include <bit>

#include "hublab/error.hpp"

namespace hublab {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

UncoveredSet::UncoveredSet(bool directed, std::size_t n)
    : directed_(directed), n_(n), bits_(n * n, 0) {}

bool UncoveredSet::insert(Vertex u, Vertex w) {
  auto& bit = bits_[index(u, w)];
  if (bit) return false;
  bit = 1;
  ++count_;
  return true;
}

bool UncoveredSet::erase(Vertex u, Vertex w) {
  auto& bit = bits_[index(u, w)];
  if (!bit) return false;
  bit = 0;
  --count_;
  return true;
}

std::vector<VertexPair> UncoveredSet::pairs() const {
  std::vector<VertexPair> out;
  out.reserve(count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex w = directed_ ? 0 : u; w < n_; ++w) {
      if (contains(u, w)) out.push_back({u, w});
    }
  }
  return out;
}

UncoveredSet initial_uncovered(const DistMatrix& d) {
  const std::size_t n = d.num_vertices();
  UncoveredSet u(d.directed(), n);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = d.directed() ? 0 : x; y < n; ++y) {
      if (d.reachable(x, y)) u.insert(x, y);
    }
  }
  return u;
}

int pair_level(Length dist) {
  if (dist == 0) return kLevelMinusInfinity;
  return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(dist))) - 1;
}

std::size_t LevelProfile::at(int level) const {
  std::size_t s = slot(level);
  return s < counts_.size() ? counts_[s] : 0;
}

void LevelProfile::add(int level, std::ptrdiff_t delta) {
  std::size_t s = slot(level);
  if (s >= counts_.size()) counts_.resize(s + 1, 0);
  counts_[s] = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(counts_[s]) + delta);
}

std::size_t LevelProfile::total() const {
  std::size_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

int LevelProfile::top_level() const {
  for (std::size_t s = counts_.size(); s-- > 1;) {
    if (counts_[s] != 0) return static_cast<int>(s) - 1;
  }
  return kLevelMinusInfinity;
}

std::strong_ordering operator<=>(const LevelProfile& a, const LevelProfile& b) {
  const std::size_t width = std::max(a.counts_.size(), b.counts_.size());
  for (std::size_t s = width; s-- > 0;) {
    std::size_t ca = s < a.counts_.size() ? a.counts_[s] : 0;
    std::size_t cb = s < b.counts_.size() ? b.counts_[s] : 0;
    if (ca != cb) return ca <=> cb;
  }
  return std::strong_ordering::equal;
}

std::vector<Vertex> CenterGraph::x_side() const {
  std::vector<Vertex> out;
  for (const auto& e : edges) {
    out.push_back(e.first);
    if (!directed) out.push_back(e.second);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Vertex> CenterGraph::y_side() const {
  if (!directed) return {};
  std::vector<Vertex> out;
  for (const auto& e : edges) out.push_back(e.second);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t CenterGraph::nonisolated_count() const {
  return x_side().size() + y_side().size();
}

CenterGraph build_center_graph(const DistMatrix& d, const UncoveredSet& u, Vertex v) {
  CenterGraph cg;
  cg.center = v;
  cg.directed = d.directed();
  const std::size_t n = d.num_vertices();
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = d.directed() ? 0 : x; y < n; ++y) {
      if (u.contains(x, y) && on_shortest_path(d, x, y, v)) cg.edges.push_back({x, y});
    }
  }
  return cg;
}

Rational density(const CenterGraph& cg) {
  if (cg.edges.empty()) {
    throw Error(ErrorCode::EmptyCenterGraph, "center graph of " + std::to_string(cg.center));
  }
  return Rational(static_cast<std::int64_t>(cg.edge_count()),
                  static_cast<std::int64_t>(cg.nonisolated_count()));
}

LevelProfile level_profile(const CenterGraph& cg, const DistMatrix& d) {
  LevelProfile p;
  for (const auto& e : cg.edges) p.add(pair_level(d.at(e.first, e.second).value()), 1);
  return p;
}

CenterGraphIndex::CenterGraphIndex(const DistMatrix& d, UncoveredSet uncovered)
    : d_(&d),
      uncovered_(std::move(uncovered)),
      edges_(d.num_vertices(), 0),
      nonisolated_(d.num_vertices(), 0),
      deg_x_(d.num_vertices() * d.num_vertices(), 0),
      deg_y_(d.directed() ? d.num_vertices() * d.num_vertices() : 0, 0),
      profiles_(d.num_vertices()) {
  for (const VertexPair& p : uncovered_.pairs()) account(p.first, p.second, +1);
}

CenterGraphIndex::CenterGraphIndex(const DistMatrix& d)
    : CenterGraphIndex(d, initial_uncovered(d)) {}

Rational CenterGraphIndex::density(Vertex v) const {
  if (edges_[v] == 0) {
    throw Error(ErrorCode::EmptyCenterGraph, "center graph of " + std::to_string(v));
  }
  return Rational(static_cast<std::int64_t>(edges_[v]),
                  static_cast<std::int64_t>(nonisolated_[v]));
}

void CenterGraphIndex::account(Vertex u, Vertex w, int sign) {
  const std::size_t n = d_->num_vertices();
  const int level = pair_level(d_->at(u, w).value());
  all_profile_.add(level, sign);

  auto bump = [&](std::uint32_t& deg, std::size_t& nonisolated) {
    if (sign > 0) {
      if (deg++ == 0) ++nonisolated;
    } else {
      if (--deg == 0) --nonisolated;
    }
  };

  for (Vertex v = 0; v < n; ++v) {
    if (!on_shortest_path(*d_, u, w, v)) continue;
    edges_[v] = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(edges_[v]) + sign);
    profiles_[v].add(level, sign);
    bump(deg_x_[v * n + u], nonisolated_[v]);
    if (d_->directed()) {
      bump(deg_y_[v * n + w], nonisolated_[v]);
    } else if (u != w) {
      bump(deg_x_[v * n + w], nonisolated_[v]);
    }
  }
}

bool CenterGraphIndex::cover(Vertex u, Vertex w) {
  const VertexPair p = d_->canonical(u, w);
  if (!uncovered_.erase(p.first, p.second)) return false;
  account(p.first, p.second, -1);
  return true;
}

}  // namespace hublab
