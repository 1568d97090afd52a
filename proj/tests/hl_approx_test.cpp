#include "doctest.h"

#include "hublab/error.hpp"
#include "hublab/generators.hpp"
#include "hublab/greedy_hhl.hpp"
#include "hublab/hl_approx.hpp"
#include "support.hpp"

using namespace hublab;

namespace {

CenterGraph undirected_cg(std::vector<VertexPair> edges) {
  CenterGraph cg;
  cg.directed = false;
  cg.edges = std::move(edges);
  std::sort(cg.edges.begin(), cg.edges.end());
  return cg;
}

}  // namespace

TEST_SUITE("hl_approx") {

TEST_CASE("peeling on small graphs") {
  CenterGraph k4 = undirected_cg({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(mds_peel(k4).density == Rational(6, 4));
  CHECK(exact_mds(k4).density == Rational(6, 4));
  CHECK(mds_peel(k4).x_side.size() == 4);

  CenterGraph star = undirected_cg({{0, 1}, {0, 2}, {0, 3}});
  CHECK(mds_peel(star).density == Rational(3, 4));
  CHECK(exact_mds(star).density == Rational(3, 4));

  CenterGraph edge = undirected_cg({{0, 1}});
  CHECK(mds_peel(edge).density == Rational(1, 2));
  CHECK_THROWS_AS(mds_peel(undirected_cg({})), Error);
}

TEST_CASE("exact densest subgraph") {
  CenterGraph tri = undirected_cg({{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  MdsResult r = exact_mds(tri);
  CHECK(r.density == Rational(1));
  CHECK(r.x_side == std::vector<Vertex>{0, 1, 2});
  std::vector<VertexPair> big;
  for (Vertex v = 1; v <= 25; ++v) big.push_back({0, v});
  CHECK_THROWS_AS(exact_mds(undirected_cg(big)), Error);
}

TEST_CASE("peeling stays within half of the optimum") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const bool directed = seed % 2 == 0;
    DistMatrix d = all_pairs_distances(support::random_graph(3 + seed % 6, 3, 4, seed, directed));
    UncoveredSet u = initial_uncovered(d);
    for (Vertex v = 0; v < d.num_vertices(); ++v) {
      CenterGraph cg = build_center_graph(d, u, v);
      if (cg.edges.empty() || cg.nonisolated_count() > 20) continue;
      CHECK(mds_peel(cg).density * 2 >= exact_mds(cg).density);
    }
  }
}

TEST_CASE("cohen covers exactly the targets") {
  DistMatrix edge = all_pairs_distances(parse_graph("p undirected 2 1\na 0 1 1\n"));
  CohenResult r = run_cohen_hl(edge, initial_uncovered(edge), true);
  CHECK(labeling_size(r.labeling) == 3);
  CHECK(labeling_size(run_cohen_hl(edge, UncoveredSet(false, 2), false).labeling) == 0);

  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const bool directed = seed % 2 == 1;
    DistMatrix d = all_pairs_distances(support::random_graph(4 + seed % 4, 3, 4, seed, directed));
    UncoveredSet half(d.directed(), d.num_vertices());
    auto all = initial_uncovered(d).pairs();
    for (std::size_t i = 0; i < all.size(); i += 2) half.insert(all[i].first, all[i].second);
    for (bool exact : {false, true}) {
      CohenResult c = run_cohen_hl(d, half, exact);
      auto pairs = half.pairs();
      CHECK(verify_cover(c.labeling, d, pairs).valid);
      for (const auto& it : c.trace.iterations) CHECK(it.edge_count >= 1);
    }
    CHECK(verify_cover(run_cohen_hl(d, initial_uncovered(d), false).labeling, d).valid);
  }
}

TEST_CASE("cohen beats g-HHL on bad-g k=5") {
  DistMatrix d = all_pairs_distances(gen_bad_g(5));
  CohenResult c = run_cohen_hl(d, initial_uncovered(d), false);
  CHECK(verify_cover(c.labeling, d).valid);
  CHECK(labeling_size(c.labeling) < labeling_size(run_g_hhl(d).labeling));
}

}  // TEST_SUITE
