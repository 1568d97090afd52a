#include "hublab/highway.hpp"

#include <algorithm>
#include <cmath>

#include "hublab/error.hpp"
#include "highway_internal.hpp"

namespace hublab {

namespace {

bool exceeds(Length length, const Rational& r) { return Rational(length) > r; }

bool within(Distance dist, const Rational& r) {
  return dist.is_finite() && Rational(dist.value()) <= r;
}

void require_undirected(const Graph& g) {
  if (g.directed()) throw Error(ErrorCode::DirectedInput, "highway dimension needs an undirected graph");
}

void collect_witnesses(const Graph& g, const DistMatrix& d, SignificantPath& p,
                       std::vector<char>& on_path) {
  const Vertex first = p.vertices.front();
  const Vertex last = p.vertices.back();
  const bool trivial = p.vertices.size() == 1;
  const Length len = p.length;
  for (Vertex v : p.vertices) on_path[v] = 1;

  p.witnesses.push_back({std::nullopt, std::nullopt, len});

  std::vector<Graph::Neighbor> fronts;
  std::vector<Graph::Neighbor> backs;
  for (const auto& nb : g.neighbors(first)) {
    if (!on_path[nb.vertex] && d.at(nb.vertex, last) == Distance(nb.length + len)) {
      fronts.push_back(nb);
    }
  }
  if (trivial) {
    backs = fronts;
  } else {
    for (const auto& nb : g.neighbors(last)) {
      if (!on_path[nb.vertex] && d.at(first, nb.vertex) == Distance(len + nb.length)) {
        backs.push_back(nb);
      }
    }
  }
  for (const auto& f : fronts) p.witnesses.push_back({f.vertex, std::nullopt, len + f.length});
  if (!trivial) {
    for (const auto& b : backs) p.witnesses.push_back({std::nullopt, b.vertex, len + b.length});
  }
  for (const auto& f : fronts) {
    for (const auto& b : backs) {
      if (f.vertex == b.vertex || (trivial && b.vertex < f.vertex)) continue;
      const Length total = f.length + len + b.length;
      if (d.at(f.vertex, b.vertex) == Distance(total)) {
        p.witnesses.push_back({f.vertex, b.vertex, total});
      }
    }
  }
  for (Vertex v : p.vertices) on_path[v] = 0;
}

}  // namespace

namespace detail {

std::vector<SignificantPath> enumerate_shortest_paths(const Graph& g, const DistMatrix& d,
                                                      std::size_t cap) {
  require_undirected(g);
  const std::size_t n = g.num_vertices();
  std::vector<SignificantPath> out;
  std::vector<char> on_path(n, 0);
  std::vector<Vertex> stack;

  auto emit = [&](Length length) {
    if (out.size() >= cap) {
      throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " shortest paths");
    }
    SignificantPath p;
    p.vertices = stack;
    p.length = length;
    collect_witnesses(g, d, p, on_path);
    out.push_back(std::move(p));
  };

  for (Vertex s = 0; s < n; ++s) {
    stack.assign(1, s);
    emit(0);
    for (Vertex t = s + 1; t < n; ++t) {
      if (!d.reachable(s, t)) continue;
      const Length target = d.at(s, t).value();
      // Depth-first walk of the shortest-path DAG from s restricted to t.
      std::vector<char> in_stack(n, 0);
      stack.assign(1, s);
      in_stack[s] = 1;
      auto walk = [&](auto&& self, Vertex x) -> void {
        if (x == t) {
          emit(target);
          return;
        }
        const Length dx = d.at(s, x).value();
        for (const auto& nb : g.neighbors(x)) {
          const Vertex y = nb.vertex;
          if (in_stack[y]) continue;
          if (d.at(s, y) != Distance(dx + nb.length)) continue;
          if (d.at(s, y) + d.at(y, t) != Distance(target)) continue;
          stack.push_back(y);
          in_stack[y] = 1;
          self(self, y);
          in_stack[y] = 0;
          stack.pop_back();
        }
      };
      walk(walk, s);
    }
  }
  return out;
}

std::vector<SignificantPath> significant_subset(const std::vector<SignificantPath>& all,
                                                const Rational& r) {
  std::vector<SignificantPath> out;
  for (const auto& p : all) {
    SignificantPath q;
    for (const auto& w : p.witnesses) {
      if (exceeds(w.length, r)) q.witnesses.push_back(w);
    }
    if (q.witnesses.empty()) continue;
    q.vertices = p.vertices;
    q.length = p.length;
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace detail

Distance distance_to_witness(const DistMatrix& d, Vertex v, const SignificantPath& p,
                             const Witness& w) {
  Distance best = Distance::infinity();
  for (Vertex u : p.vertices) best = std::min(best, d.at(v, u));
  if (w.front) best = std::min(best, d.at(v, *w.front));
  if (w.back) best = std::min(best, d.at(v, *w.back));
  return best;
}

std::vector<SignificantPath> enumerate_significant_paths(const Graph& g, const DistMatrix& d,
                                                         const Rational& r, std::size_t cap) {
  return detail::significant_subset(detail::enumerate_shortest_paths(g, d, cap), r);
}

std::vector<SignificantPath> neighborhood_S(const std::vector<SignificantPath>& significant,
                                            const DistMatrix& d, Vertex v, const Rational& r) {
  const Rational reach = r * 2;
  std::vector<SignificantPath> out;
  for (const auto& p : significant) {
    for (const auto& w : p.witnesses) {
      if (exceeds(w.length, r) && within(distance_to_witness(d, v, p, w), reach)) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

std::vector<SignificantPath> neighborhood_S(const Graph& g, const DistMatrix& d, Vertex v,
                                            const Rational& r, std::size_t cap) {
  return neighborhood_S(enumerate_significant_paths(g, d, r, cap), d, v, r);
}

std::vector<Vertex> ball(const DistMatrix& d, Vertex v, const Rational& r) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < d.num_vertices(); ++u) {
    if (within(d.at(v, u), r)) out.push_back(u);
  }
  return out;
}

std::size_t max_ball_intersection(const DistMatrix& d, const std::vector<Vertex>& c,
                                  const Rational& radius) {
  std::size_t best = 0;
  for (Vertex v = 0; v < d.num_vertices(); ++v) {
    std::size_t count = 0;
    for (Vertex w : c) count += within(d.at(v, w), radius) ? 1 : 0;
    best = std::max(best, count);
  }
  return best;
}

namespace {

bool hits_all(const std::vector<SignificantPath>& paths, const std::vector<Vertex>& c,
              std::size_t n) {
  std::vector<char> in_c(n, 0);
  for (Vertex v : c) in_c[v] = 1;
  return std::all_of(paths.begin(), paths.end(), [&](const SignificantPath& p) {
    return std::any_of(p.vertices.begin(), p.vertices.end(), [&](Vertex v) { return in_c[v]; });
  });
}

std::vector<Vertex> greedy_hitting_set(const std::vector<SignificantPath>& paths, std::size_t n) {
  std::vector<char> hit(paths.size(), 0);
  std::vector<Vertex> chosen;
  std::size_t remaining = paths.size();
  while (remaining > 0) {
    std::vector<std::size_t> score(n, 0);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (hit[i]) continue;
      for (Vertex v : paths[i].vertices) ++score[v];
    }
    Vertex best = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (score[v] > score[best]) best = v;
    }
    chosen.push_back(best);
    for (std::size_t i = 0; i < paths.size(); ++i) {
      if (hit[i]) continue;
      const auto& vs = paths[i].vertices;
      if (std::find(vs.begin(), vs.end(), best) != vs.end()) {
        hit[i] = 1;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::size_t level_count(Length diameter) {
  // Levels 0..ceil(log2 D); a single level when D <= 1.
  std::size_t top = 0;
  while ((Length{1} << top) < diameter) ++top;
  return top + 1;
}

Rational level_threshold(std::size_t i) {
  return i == 0 ? Rational(1, 2) : Rational(Length{1} << (i - 1));
}

}  // namespace

bool is_sphs(const Graph& g, const DistMatrix& d, const std::vector<Vertex>& c, std::size_t h,
             const Rational& r, std::size_t cap) {
  if (!hits_all(enumerate_significant_paths(g, d, r, cap), c, g.num_vertices())) return false;
  return max_ball_intersection(d, c, r * 2) <= h;
}

std::vector<std::vector<Vertex>> MultiscaleSphs::exclusive_levels() const {
  std::vector<std::vector<Vertex>> out(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    for (Vertex v : levels[i]) {
      bool higher = false;
      for (std::size_t j = i + 1; j < levels.size() && !higher; ++j) {
        higher = std::binary_search(levels[j].begin(), levels[j].end(), v);
      }
      if (!higher) out[i].push_back(v);
    }
  }
  return out;
}

std::size_t MultiscaleSphs::label_bound() const {
  std::size_t total = 1;
  for (auto h : ball_caps) total += h;
  return total;
}

MultiscaleSphs greedy_multiscale_sphs(const Graph& g, const DistMatrix& d, std::size_t cap) {
  require_undirected(g);
  for (const Arc& a : g.arcs()) {
    if (a.length < 1) {
      throw Error(ErrorCode::InfeasibleParams, "multiscale SPHS needs edge lengths >= 1");
    }
  }
  const std::size_t n = g.num_vertices();
  const auto all = detail::enumerate_shortest_paths(g, d, cap);
  MultiscaleSphs ms;
  const std::size_t count = level_count(d.diameter());
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Vertex> level;
    if (i == 0) {
      for (Vertex v = 0; v < n; ++v) level.push_back(v);
    } else {
      level = greedy_hitting_set(detail::significant_subset(all, level_threshold(i)), n);
    }
    ms.ball_caps.push_back(max_ball_intersection(d, level, level_threshold(i) * 2));
    ms.levels.push_back(std::move(level));
  }
  return ms;
}

SphsLabeling sphs_to_hhl(const Graph& g, const DistMatrix& d, const MultiscaleSphs& ms,
                         std::size_t cap) {
  require_undirected(g);
  const std::size_t n = g.num_vertices();
  if (ms.levels.empty() || ms.levels[0].size() != n) {
    throw Error(ErrorCode::InvalidSphs, "level 0 must contain every vertex");
  }
  const auto all = detail::enumerate_shortest_paths(g, d, cap);
  for (std::size_t i = 1; i < ms.levels.size(); ++i) {
    if (!hits_all(detail::significant_subset(all, level_threshold(i)), ms.levels[i], n)) {
      throw Error(ErrorCode::InvalidSphs,
                  "level " + std::to_string(i) + " misses a significant path");
    }
  }

  const auto exclusive = ms.exclusive_levels();
  std::vector<Vertex> sequence;
  for (std::size_t i = exclusive.size(); i-- > 0;) {
    sequence.insert(sequence.end(), exclusive[i].begin(), exclusive[i].end());
  }
  Order order(std::move(sequence));

  Labeling l(false, n);
  for (Vertex v = 0; v < n; ++v) {
    l.add_hub(Side::Forward, v, v, 0);
    for (std::size_t j = 0; j < ms.levels.size(); ++j) {
      const Rational radius(Length{1} << j);
      for (Vertex w : ms.levels[j]) {
        if (order.more_important(w, v) && within(d.at(v, w), radius)) {
          l.add_hub(Side::Forward, v, w, d.at(v, w).value());
        }
      }
    }
  }
  return {std::move(order), std::move(l)};
}

LevelAudit audit_dhhl_levels(const RunTrace& trace, const DistMatrix& d, std::size_t h) {
  if (trace.algorithm != TraceAlgorithm::GreedyDistance) {
    throw Error(ErrorCode::TraceNotFromDHHL,
                std::string("trace comes from ") + to_string(trace.algorithm));
  }
  const std::size_t n = d.num_vertices();
  LevelAudit audit;
  audit.hubs_per_level.assign(n, {});
  audit.label_sizes.assign(n, 0);
  for (const auto& rec : trace.iterations) {
    const std::size_t slot = rec.uncovered_top_level == kLevelMinusInfinity
                                 ? 0
                                 : static_cast<std::size_t>(rec.uncovered_top_level) + 1;
    for (const LabelUpdate& up : rec.added) {
      auto& row = audit.hubs_per_level[up.vertex];
      if (row.size() <= slot) row.resize(slot + 1, 0);
      ++row[slot];
      ++audit.label_sizes[up.vertex];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (auto c : audit.hubs_per_level[v]) audit.max_count = std::max(audit.max_count, c);
    audit.max_label_size = std::max(audit.max_label_size, audit.label_sizes[v]);
  }
  const double denom =
      static_cast<double>(std::max<std::size_t>(h, 1)) * std::log2(static_cast<double>(n) + 1.0);
  audit.ratio = static_cast<double>(audit.max_count) / denom;
  return audit;
}

}  // namespace hublab
