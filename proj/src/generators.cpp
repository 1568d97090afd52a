#include "hublab/generators.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "hublab/error.hpp"

namespace hublab {

namespace {

void require_k(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::InfeasibleParams, "family parameter k must be at least 2");
}

void require_undirected(const Graph& g) {
  if (g.directed()) throw Error(ErrorCode::DirectedInput, "base graph must be undirected");
}

void require_cover(const Graph& base, const std::vector<Vertex>& vc) {
  std::vector<char> in(base.num_vertices(), 0);
  for (Vertex v : vc) {
    if (v >= base.num_vertices()) {
      throw Error(ErrorCode::VertexOutOfRange, "cover vertex " + std::to_string(v));
    }
    in[v] = 1;
  }
  for (const Arc& a : base.arcs()) {
    if (!in[a.tail] && !in[a.head]) {
      throw Error(ErrorCode::NotAVertexCover, "edge {" + std::to_string(a.tail) + "," +
                                                  std::to_string(a.head) + "} is uncovered");
    }
  }
}

void add(Labeling& l, const DistMatrix& d, Side side, Vertex v, Vertex hub) {
  const Distance dist = side == Side::Forward ? d.at(v, hub) : d.at(hub, v);
  l.add_hub(side, v, hub, dist.value());
}

}  // namespace

Vertex bad_g_a(std::size_t, std::size_t i) { return static_cast<Vertex>(i - 1); }
Vertex bad_g_b(std::size_t k, std::size_t j) { return static_cast<Vertex>(k + j - 1); }
Vertex bad_g_c(std::size_t k, std::size_t i, std::size_t j) {
  return static_cast<Vertex>(2 * k + 1 + (i - 1) * k + (j - 1));
}

Graph gen_bad_g(std::size_t k, bool directed) {
  require_k(k);
  Graph g(directed, k + (k + 1) + k * (k + 1));
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k + 1; ++j) g.add_arc(bad_g_a(k, i), bad_g_b(k, j), 1);
  }
  for (std::size_t i = 1; i <= k + 1; ++i) {
    for (std::size_t j = 1; j <= k; ++j) g.add_arc(bad_g_b(k, i), bad_g_c(k, i, j), 1);
  }
  return g;
}

Order bad_g_greedy_order(std::size_t k) {
  return Order::identity(k + (k + 1) + k * (k + 1));
}

Order bad_g_better_order(std::size_t k) {
  std::vector<Vertex> seq;
  for (std::size_t j = 1; j <= k + 1; ++j) seq.push_back(bad_g_b(k, j));
  for (std::size_t i = 1; i <= k; ++i) seq.push_back(bad_g_a(k, i));
  for (Vertex v = bad_g_c(k, 1, 1); v < k + (k + 1) + k * (k + 1); ++v) seq.push_back(v);
  return Order(std::move(seq));
}

std::size_t bad_w_l(std::size_t k) { return 2 * k * k; }
Vertex bad_w_c(std::size_t, std::size_t i) { return static_cast<Vertex>(2 + (i - 1)); }
Vertex bad_w_d(std::size_t k, std::size_t i, std::size_t j) {
  return static_cast<Vertex>(2 + k + (i - 1) * bad_w_l(k) + (j - 1));
}

Graph gen_bad_w(std::size_t k) {
  require_k(k);
  const std::size_t l = bad_w_l(k);
  Graph g(false, 2 + k + k * l);
  for (std::size_t i = 1; i <= k; ++i) {
    g.add_arc(1, bad_w_c(k, i), 2);
    for (std::size_t j = 1; j <= l; ++j) {
      g.add_arc(0, bad_w_d(k, i, j), 3);
      g.add_arc(bad_w_c(k, i), bad_w_d(k, i, j), 2);
    }
  }
  return g;
}

Order bad_w_better_order(std::size_t k) { return Order::identity(2 + k + k * bad_w_l(k)); }

Vertex separator_leaf(std::size_t k, std::size_t star, std::size_t j) {
  return static_cast<Vertex>(k + star * (k - 1) + j);
}
Vertex separator_hub(std::size_t k) { return static_cast<Vertex>(k * k); }

std::size_t separator_star(std::size_t k, Vertex v) {
  if (v < k) return v;
  if (v == separator_hub(k)) return k;
  return (v - k) / (k - 1);
}

Graph gen_separator(std::size_t k) {
  require_k(k);
  Graph g(false, k * k + 1);
  for (Vertex a = 0; a < k; ++a) {
    for (Vertex b = a + 1; b < k; ++b) g.add_arc(a, b, 1);
  }
  for (std::size_t star = 0; star < k; ++star) {
    for (std::size_t j = 0; j + 1 < k; ++j) {
      g.add_arc(static_cast<Vertex>(star), separator_leaf(k, star, j), 1);
      g.add_arc(separator_leaf(k, star, j), separator_hub(k), 1);
    }
  }
  return g;
}

Graph gen_cycle4(bool directed) {
  Graph g(directed, 4);
  for (Vertex v = 0; v < 4; ++v) {
    g.add_arc(v, (v + 1) % 4, 1);
    if (directed) g.add_arc((v + 1) % 4, v, 1);
  }
  return g;
}

Graph reduce_vc_undirected(const Graph& base, bool scaled) {
  require_undirected(base);
  const std::size_t n = base.num_vertices();
  const Length unit = scaled ? 10 : 1;
  const Length hub_edge = scaled ? 9 : 1;
  const Vertex s = static_cast<Vertex>(3 * n);
  Graph g(false, 6 * n + 1);
  for (Vertex v = 0; v < n; ++v) {
    g.add_arc(3 * v, 3 * v + 1, unit);
    g.add_arc(3 * v + 1, 3 * v + 2, unit);
  }
  for (const Arc& a : base.arcs()) g.add_arc(3 * a.tail, 3 * a.head, unit);
  for (Vertex v = 0; v < n; ++v) g.add_arc(s, 3 * v, hub_edge);
  for (Vertex leaf = s + 1; leaf < 6 * n + 1; ++leaf) g.add_arc(s, leaf, unit);
  return g;
}

Labeling construct_reduction_labeling_undirected(const Graph& base, const Graph& reduced,
                                                 const std::vector<Vertex>& vc) {
  require_undirected(base);
  require_cover(base, vc);
  const std::size_t n = base.num_vertices();
  if (reduced.num_vertices() != 6 * n + 1) {
    throw Error(ErrorCode::Mismatch, "reduced graph does not match the base graph");
  }
  std::vector<char> in(n, 0);
  for (Vertex v : vc) in[v] = 1;
  const DistMatrix d = all_pairs_distances(reduced);
  const Vertex s = static_cast<Vertex>(3 * n);
  Labeling l(false, reduced.num_vertices());
  for (Vertex x = 0; x < reduced.num_vertices(); ++x) {
    add(l, d, Side::Forward, x, x);
    add(l, d, Side::Forward, x, s);
  }
  for (Vertex v = 0; v < n; ++v) {
    const Vertex v1 = 3 * v, v2 = 3 * v + 1, v3 = 3 * v + 2;
    if (in[v]) {
      add(l, d, Side::Forward, v2, v1);
      add(l, d, Side::Forward, v3, v1);
      add(l, d, Side::Forward, v3, v2);
    } else {
      add(l, d, Side::Forward, v1, v2);
      add(l, d, Side::Forward, v3, v2);
    }
  }
  for (const Arc& a : base.arcs()) {
    const Vertex c = in[a.tail] ? a.tail : a.head;
    const Vertex o = c == a.tail ? a.head : a.tail;
    for (Vertex i = 0; i < 3; ++i) add(l, d, Side::Forward, 3 * o + i, 3 * c);
  }
  return l;
}

std::vector<std::size_t> reduction_crossings(const Graph& base, const Labeling& l) {
  const std::size_t n = base.num_vertices();
  auto gadget = [&](Vertex x) -> std::size_t { return x < 3 * n ? x / 3 : n; };
  std::vector<std::size_t> out;
  for (const Arc& a : base.arcs()) {
    std::size_t count = 0;
    for (Vertex x = 0; x < l.num_vertices(); ++x) {
      const std::size_t gx = gadget(x);
      if (gx != a.tail && gx != a.head) continue;
      const std::size_t other = gx == a.tail ? a.head : a.tail;
      for (const auto& e : l.forward(x)) count += gadget(e.hub) == other ? 1 : 0;
      if (!l.directed()) continue;
      for (const auto& e : l.backward(x)) count += gadget(e.hub) == other ? 1 : 0;
    }
    out.push_back(count);
  }
  return out;
}

Graph reduce_vc_directed(const Graph& base) {
  require_undirected(base);
  const std::size_t n = base.num_vertices();
  Graph g(true, 1 + 2 * n + base.num_arcs());
  auto one = [](Vertex v) { return 1 + 2 * v; };
  auto two = [](Vertex v) { return 2 + 2 * v; };
  for (Vertex v = 0; v < n; ++v) {
    g.add_arc(0, one(v), 1);
    g.add_arc(one(v), two(v), 1);
  }
  Vertex e = static_cast<Vertex>(1 + 2 * n);
  for (const Arc& a : base.arcs()) {
    g.add_arc(one(a.tail), two(a.head), 1);
    g.add_arc(one(a.head), two(a.tail), 1);
    g.add_arc(two(a.tail), e, 1);
    g.add_arc(two(a.head), e, 1);
    ++e;
  }
  return g;
}

std::size_t mandatory_hub_count(const Graph& reduced) {
  return 2 * reduced.num_vertices() + reduced.num_arcs();
}

Labeling construct_reduction_labeling_directed(const Graph& base, const Graph& reduced,
                                               const std::vector<Vertex>& vc) {
  require_undirected(base);
  require_cover(base, vc);
  const std::size_t n = base.num_vertices();
  if (reduced.num_vertices() != 1 + 2 * n + base.num_arcs() || !reduced.directed()) {
    throw Error(ErrorCode::Mismatch, "reduced graph does not match the base graph");
  }
  const DistMatrix d = all_pairs_distances(reduced);
  const Vertex first_edge = static_cast<Vertex>(1 + 2 * n);
  Labeling l(true, reduced.num_vertices());
  for (Vertex x = 0; x < reduced.num_vertices(); ++x) {
    add(l, d, Side::Forward, x, x);
    add(l, d, Side::Backward, x, x);
  }
  for (const Arc& a : reduced.arcs()) {
    if (a.tail == 0) {
      add(l, d, Side::Forward, 0, a.head);
    } else if (a.head >= first_edge) {
      add(l, d, Side::Backward, a.head, a.tail);
    } else if ((a.tail - 1) / 2 == (a.head - 1) / 2) {
      add(l, d, Side::Backward, a.head, a.tail);
    } else {
      add(l, d, Side::Forward, a.tail, a.head);
    }
  }
  for (Vertex v : vc) add(l, d, Side::Forward, 0, 2 + 2 * v);
  return l;
}

Labeling construct_separator_hl(std::size_t k) {
  require_k(k);
  const DistMatrix d = all_pairs_distances(gen_separator(k));
  const Vertex s = separator_hub(k);
  Labeling l(false, k * k + 1);
  add(l, d, Side::Forward, s, s);
  for (Vertex c = 0; c < k; ++c) {
    add(l, d, Side::Forward, c, s);
    for (Vertex other = 0; other < k; ++other) add(l, d, Side::Forward, c, other);
    for (std::size_t j = 0; j + 1 < k; ++j) {
      const Vertex leaf = separator_leaf(k, c, j);
      add(l, d, Side::Forward, leaf, leaf);
      add(l, d, Side::Forward, leaf, s);
      add(l, d, Side::Forward, leaf, c);
    }
  }
  return l;
}

std::size_t separator_crossings(std::size_t k, const Labeling& l) {
  const Vertex s = separator_hub(k);
  auto is_leaf = [&](Vertex v) { return v >= k && v != s; };
  std::size_t count = 0;
  for (Vertex x = 0; x < l.num_vertices(); ++x) {
    if (x == s) continue;
    auto scan = [&](const Label& label) {
      for (const auto& e : label) {
        if (e.hub == s || separator_star(k, e.hub) == separator_star(k, x)) continue;
        if (is_leaf(x) != is_leaf(e.hub)) ++count;
      }
    };
    scan(l.forward(x));
    if (l.directed()) scan(l.backward(x));
  }
  return count;
}

Order separator_order(std::size_t k, const std::vector<Vertex>& centers) {
  std::vector<Vertex> seq = centers;
  seq.push_back(separator_hub(k));
  for (Vertex v = static_cast<Vertex>(k); v < separator_hub(k); ++v) seq.push_back(v);
  return Order(std::move(seq));
}

Labeling construct_c4prime_hl() {
  const DistMatrix d = all_pairs_distances(gen_cycle4(true));
  Labeling l(true, 4);
  const Vertex fwd[4] = {3, 2, 1, 0};
  const Vertex bwd[4] = {1, 0, 3, 2};
  for (Vertex v = 0; v < 4; ++v) {
    add(l, d, Side::Forward, v, v);
    add(l, d, Side::Forward, v, fwd[v]);
    add(l, d, Side::Backward, v, v);
    add(l, d, Side::Backward, v, bwd[v]);
  }
  return l;
}

Graph gen_random(std::size_t n, std::size_t m, Length maxlen, std::uint64_t seed,
                 bool directed) {
  if (n == 0) throw Error(ErrorCode::InfeasibleParams, "need at least one vertex");
  if (maxlen < 1) throw Error(ErrorCode::InfeasibleParams, "maximum length must be >= 1");
  const std::size_t max_m = directed ? n * (n - 1) : n * (n - 1) / 2;
  const std::size_t min_m = n == 1 ? 0 : (directed ? n : n - 1);
  if (m < min_m || m > max_m) {
    throw Error(ErrorCode::InfeasibleParams, std::to_string(m) + " edges impossible on " +
                                                 std::to_string(n) + " connected vertices");
  }
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t bound) { return rng() % bound; };
  auto length = [&] { return static_cast<Length>(below(static_cast<std::uint64_t>(maxlen))) + 1; };

  Graph g(directed, n);
  std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
  auto put = [&](Vertex a, Vertex b) {
    g.add_arc(a, b, length());
    used[a][b] = 1;
    if (!directed) used[b][a] = 1;
  };
  if (directed) {
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(i)]);
    if (n > 1) {
      for (std::size_t i = 0; i < n; ++i) put(perm[i], perm[(i + 1) % n]);
    }
  } else {
    for (Vertex v = 1; v < n; ++v) put(static_cast<Vertex>(below(v)), v);
  }

  std::vector<std::pair<Vertex, Vertex>> rest;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = directed ? 0 : a + 1; b < n; ++b) {
      if (a != b && !used[a][b]) rest.push_back({a, b});
    }
  }
  for (std::size_t i = rest.size(); i > 1; --i) std::swap(rest[i - 1], rest[below(i)]);
  for (std::size_t i = 0; g.num_arcs() < m; ++i) put(rest[i].first, rest[i].second);
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g(false, n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) g.add_arc(a, b, 1);
  }
  return g;
}

Graph path_graph(std::size_t n, Length length) {
  Graph g(false, n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_arc(v, v + 1, length);
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g(false, n);
  for (Vertex v = 0; v < n; ++v) g.add_arc(v, static_cast<Vertex>((v + 1) % n), 1);
  return g;
}

Graph star_graph(std::size_t leaves) {
  Graph g(false, leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_arc(0, v, 1);
  return g;
}

}  // namespace hublab
