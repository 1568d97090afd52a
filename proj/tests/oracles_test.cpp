#include "doctest.h"

#include "hublab/error.hpp"
#include "hublab/generators.hpp"
#include "hublab/highway.hpp"
#include "hublab/oracles.hpp"
#include "support.hpp"

using namespace hublab;

TEST_SUITE("oracles") {

TEST_CASE("optimal HHL by order enumeration") {
  CHECK(optimal_hhl_bruteforce(all_pairs_distances(gen_cycle4(false))).size == 9);
  CHECK(optimal_hhl_bruteforce(all_pairs_distances(Graph(false, 1))).size == 1);
  DistMatrix g2 = all_pairs_distances(gen_bad_g(2));
  REQUIRE(g2.num_vertices() == 11);
  OptimalHhl best = optimal_hhl_bruteforce(g2, 11);
  CHECK(best.size == labeling_size(canonical_hhl(g2, bad_g_better_order(2))));
  CHECK(labeling_size(canonical_hhl(g2, best.order)) == best.size);
  CHECK_THROWS_AS(optimal_hhl_bruteforce(all_pairs_distances(path_graph(10)), 9), Error);
}

TEST_CASE("canonical size shortcut matches the construction") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const bool directed = seed % 2 == 0;
    DistMatrix d = all_pairs_distances(support::random_graph(2 + seed % 7, 2, 3, seed, directed));
    Order o = Order::identity(d.num_vertices());
    CHECK(canonical_size(d, o) == labeling_size(canonical_hhl(d, o)));
  }
}

TEST_CASE("optimal HL by branch and bound") {
  DistMatrix edge = all_pairs_distances(parse_graph("p undirected 2 1\na 0 1 1\n"));
  OptimalHl e = optimal_hl_bnb(edge, initial_uncovered(edge));
  CHECK(e.complete);
  CHECK(e.upper == 3);

  DistMatrix c4 = all_pairs_distances(gen_cycle4(false));
  OptimalHl r = optimal_hl_bnb(c4, initial_uncovered(c4));
  CHECK(r.complete);
  CHECK(r.lower == 9);
  CHECK(r.upper == 9);
  CHECK(verify_cover(r.labeling, c4).valid);

  DistMatrix c4p = all_pairs_distances(gen_cycle4(true));
  OptimalHl rp = optimal_hl_bnb(c4p, initial_uncovered(c4p));
  CHECK(rp.complete);
  CHECK(rp.upper == 16);
  CHECK(labeling_size(rp.labeling) == 16);
}

TEST_CASE("branch and bound agrees with exhaustive search") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const bool directed = seed % 3 == 0;
    const std::size_t n = directed ? 3 : 3 + seed % 3;
    DistMatrix d = all_pairs_distances(support::random_graph(n, seed % 3, 3, seed, directed));
    OptimalHl r = optimal_hl_bnb(d, initial_uncovered(d));
    REQUIRE(r.complete);
    CHECK(r.upper == support::exhaustive_optimal_hl(d));
    CHECK(labeling_size(r.labeling) == r.upper);
    CHECK(verify_cover(r.labeling, d).valid);
    if (d.num_vertices() <= 7) CHECK(r.upper <= optimal_hhl_bruteforce(d).size);
  }
}

TEST_CASE("budget exhaustion keeps a valid labeling") {
  DistMatrix d = all_pairs_distances(gen_separator(3));
  OptimalHl r = optimal_hl_bnb(d, initial_uncovered(d), 10);
  CHECK_FALSE(r.complete);
  CHECK(r.lower <= r.upper);
  CHECK(verify_cover(r.labeling, d).valid);
  CHECK(labeling_size(r.labeling) == r.upper);
}

TEST_CASE("minimum vertex cover") {
  CHECK(min_vertex_cover(complete_graph(2)).size() == 1);
  CHECK(min_vertex_cover(complete_graph(3)).size() == 2);
  CHECK(min_vertex_cover(path_graph(3)) == std::vector<Vertex>{1});
  CHECK(min_vertex_cover(cycle_graph(5)).size() == 3);
  CHECK(min_vertex_cover(star_graph(6)) == std::vector<Vertex>{0});
  CHECK(min_vertex_cover(Graph(false, 3)).empty());
  CHECK_THROWS_AS(min_vertex_cover(gen_cycle4(true)), Error);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = support::random_graph(8, 6, 1, seed, false);
    auto vc = min_vertex_cover(g);
    CHECK(is_vertex_cover(g, vc));
    // No smaller cover exists.
    bool smaller = false;
    for (std::uint32_t mask = 0; mask < 256 && !smaller; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) >= vc.size()) continue;
      std::vector<Vertex> c;
      for (Vertex v = 0; v < 8; ++v) {
        if (mask >> v & 1) c.push_back(v);
      }
      smaller = is_vertex_cover(g, c);
    }
    CHECK_FALSE(smaller);
  }
}

TEST_CASE("minimum hitting set") {
  CHECK(min_hitting_set({{4}, {9}}) == std::vector<Vertex>{4, 9});
  CHECK(min_hitting_set({{4}, {4, 9}}) == std::vector<Vertex>{4});
  CHECK(min_hitting_set({}).empty());
  CHECK_THROWS_AS(min_hitting_set({{}}), Error);
  CHECK_THROWS_AS(min_hitting_set({{1}, {2}, {3}}, 2), Error);

  const std::size_t k = 3;
  Graph g = gen_bad_g(k, false);
  DistMatrix d = all_pairs_distances(g);
  std::vector<std::vector<Vertex>> sets;
  for (const auto& p : enumerate_significant_paths(g, d, Rational(1, 2))) {
    if (p.length > 0) sets.push_back(p.vertices);
  }
  std::vector<Vertex> bs;
  for (std::size_t j = 1; j <= k + 1; ++j) bs.push_back(bad_g_b(k, j));
  for (const auto& s : sets) {
    CHECK(std::find_first_of(s.begin(), s.end(), bs.begin(), bs.end()) != s.end());
  }
  CHECK(min_hitting_set(sets).size() <= k + 1);
}

TEST_CASE("highway dimension by brute force") {
  CHECK(highway_dimension_bruteforce(Graph(false, 1)).h == 0);
  CHECK_THROWS_AS(highway_dimension_bruteforce(gen_bad_g(2)), Error);
  CHECK_THROWS_AS(highway_dimension_bruteforce(path_graph(30)), Error);
  // A star's center hits every path with an edge; at r = 1/2 the leaves'
  // trivial paths each need their own hitting vertex.
  CHECK(highway_dimension_bruteforce(star_graph(3)).h == 4);
  const HighwayDimension p = highway_dimension_bruteforce(path_graph(5));
  CHECK(p.h >= 1);
  CHECK(p.h <= 5);
}

}  // TEST_SUITE
