#pragma once

// Independent reference computations used only by the tests. They share no
// code with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hublab/center_graph.hpp"
#include "hublab/generators.hpp"
#include "hublab/graph.hpp"
#include "hublab/labeling.hpp"

namespace support {

using hublab::Graph;
using hublab::Length;
using hublab::Vertex;

// Random connected graph with `extra` edges beyond the minimum, clamped to
// what n vertices allow.
inline Graph random_graph(std::size_t n, std::size_t extra, Length maxlen, std::uint64_t seed,
                          bool directed) {
  const std::size_t min_m = n == 1 ? 0 : (directed ? n : n - 1);
  const std::size_t max_m = directed ? n * (n - 1) : n * (n - 1) / 2;
  return hublab::gen_random(n, std::min(min_m + extra, max_m), maxlen, seed, directed);
}

struct PathFacts {
  // dist[u][w], nullopt when unreachable.
  std::vector<std::vector<std::optional<Length>>> dist;
  // on[u][w] = vertices of some minimum-length simple u-w path.
  std::vector<std::vector<std::set<Vertex>>> on;
};

// Enumerates every simple path from every source.
inline PathFacts enumerate_paths(const Graph& g) {
  const std::size_t n = g.num_vertices();
  PathFacts f;
  f.dist.assign(n, std::vector<std::optional<Length>>(n));
  f.on.assign(n, std::vector<std::set<Vertex>>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::vector<Vertex> path{s};
    std::vector<char> seen(n, 0);
    seen[s] = 1;
    std::vector<std::vector<std::vector<Vertex>>> found(n);
    std::vector<std::vector<Length>> lengths(n);
    std::function<void(Vertex, Length)> dfs = [&](Vertex x, Length len) {
      found[x].push_back(path);
      lengths[x].push_back(len);
      for (const auto& nb : g.neighbors(x)) {
        if (seen[nb.vertex]) continue;
        seen[nb.vertex] = 1;
        path.push_back(nb.vertex);
        dfs(nb.vertex, len + nb.length);
        path.pop_back();
        seen[nb.vertex] = 0;
      }
    };
    dfs(s, 0);
    for (Vertex t = 0; t < n; ++t) {
      if (lengths[t].empty()) continue;
      const Length best = *std::min_element(lengths[t].begin(), lengths[t].end());
      f.dist[s][t] = best;
      for (std::size_t i = 0; i < found[t].size(); ++i) {
        if (lengths[t][i] == best) f.on[s][t].insert(found[t][i].begin(), found[t][i].end());
      }
    }
  }
  return f;
}

// Smallest labeling over every subset of non-self entries (self entries are
// forced). Feasible for undirected n <= 5 and directed n <= 3.
inline std::size_t exhaustive_optimal_hl(const hublab::DistMatrix& d) {
  const std::size_t n = d.num_vertices();
  const std::size_t sides = d.directed() ? 2 : 1;
  struct Slot {
    std::size_t side;
    Vertex owner;
    Vertex hub;
  };
  std::vector<Slot> slots;
  for (std::size_t side = 0; side < sides; ++side) {
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex h = 0; h < n; ++h) {
        if (v != h) slots.push_back({side, v, h});
      }
    }
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    const auto extra = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (sides * n + extra >= best) continue;
    std::vector<std::vector<char>> fwd(n, std::vector<char>(n, 0)), bwd = fwd;
    for (Vertex v = 0; v < n; ++v) fwd[v][v] = bwd[v][v] = 1;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      const auto& s = slots[i];
      (s.side == 0 ? fwd : bwd)[s.owner][s.hub] = 1;
      if (!d.directed()) bwd[s.owner][s.hub] = 1;
    }
    bool ok = true;
    for (Vertex u = 0; u < n && ok; ++u) {
      for (Vertex w = 0; w < n && ok; ++w) {
        if (!d.reachable(u, w)) continue;
        bool hit = false;
        for (Vertex h = 0; h < n && !hit; ++h) {
          hit = fwd[u][h] && bwd[w][h] && d.at(u, h) + d.at(h, w) == d.at(u, w);
        }
        ok = hit;
      }
    }
    if (ok) best = sides * n + extra;
  }
  return best;
}

// Sum of pair weights for a center graph, with weight n^(2(level+1)) for
// level >= 0 and 1 for distance-0 pairs: the standard level weights scaled by n^2,
// with a positive weight below every level-0 weight for the self pairs.
inline boost::multiprecision::cpp_int weight_sum(const hublab::CenterGraph& cg,
                                                 const hublab::DistMatrix& d) {
  using boost::multiprecision::cpp_int;
  const cpp_int n = d.num_vertices();
  cpp_int total = 0;
  for (const auto& e : cg.edges) {
    const Length dist = d.at(e.first, e.second).value();
    if (dist == 0) {
      total += 1;
      continue;
    }
    int level = 0;
    while ((Length{2} << level) <= dist) ++level;
    cpp_int w = 1;
    for (int i = 0; i < 2 * (level + 1); ++i) w *= n;
    total += w;
  }
  return total;
}

}  // namespace support
