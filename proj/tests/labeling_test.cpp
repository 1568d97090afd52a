#include "doctest.h"

#include <random>

#include "hublab/error.hpp"
#include "hublab/generators.hpp"
#include "hublab/labeling.hpp"
#include "support.hpp"

using namespace hublab;

namespace {

Graph edge_graph() { return parse_graph("p undirected 2 1\na 0 1 1\n"); }

Order random_order(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> seq(n);
  for (Vertex v = 0; v < n; ++v) seq[v] = v;
  std::shuffle(seq.begin(), seq.end(), rng);
  return Order(seq);
}

}  // namespace

TEST_SUITE("labeling") {

TEST_CASE("query merges common hubs") {
  Labeling single(false, 1);
  single.add_hub(Side::Forward, 0, 0, 0);
  CHECK(query(single, 0, 0) == Distance(0));

  Labeling l(false, 2);
  l.add_hub(Side::Forward, 0, 0, 0);
  l.add_hub(Side::Forward, 1, 0, 1);
  l.add_hub(Side::Forward, 1, 1, 0);
  CHECK(query(l, 0, 1) == Distance(1));
  CHECK(query(l, 1, 0) == Distance(1));
  CHECK(labeling_size(l) == 3);
  CHECK(verify_cover(l, all_pairs_distances(edge_graph())).valid);

  Labeling empty(true, 2);
  CHECK(query(empty, 0, 1) == Distance::infinity());
}

TEST_CASE("verify_cover reports uncovered pairs") {
  DistMatrix d = all_pairs_distances(edge_graph());
  CoverReport r = verify_cover(Labeling(false, 2), d);
  CHECK_FALSE(r.valid);
  CHECK(r.violations == std::vector<VertexPair>{{0, 0}, {0, 1}, {1, 1}});

  Labeling l(false, 2);
  l.add_hub(Side::Forward, 0, 0, 0);
  l.add_hub(Side::Forward, 1, 1, 0);
  l.add_hub(Side::Forward, 1, 0, 1);
  l.remove_hub(Side::Forward, 1, 0);
  CHECK(verify_cover(l, d).violations == std::vector<VertexPair>{{0, 1}});

  Labeling wrong(false, 2);
  wrong.add_hub(Side::Forward, 0, 0, 0);
  wrong.add_hub(Side::Forward, 1, 1, 0);
  wrong.add_hub(Side::Forward, 1, 0, 7);
  CHECK_FALSE(verify_cover(wrong, d).valid);

  CHECK_THROWS_AS(verify_cover(Labeling(false, 3), d), Error);
}

TEST_CASE("canonical labeling of C4") {
  DistMatrix d = all_pairs_distances(gen_cycle4(false));
  Labeling l = canonical_hhl(d, Order::identity(4));
  CHECK(labeling_size(l) == 9);
  CHECK(l.forward(2) == Label{{0, 2}, {1, 1}, {2, 0}});
  CHECK(verify_cover(l, d).valid);
}

TEST_CASE("canonical labeling of bad-g, b vertices first") {
  const std::size_t k = 3;
  DistMatrix d = all_pairs_distances(gen_bad_g(k));
  Labeling l = canonical_hhl(d, bad_g_better_order(k));
  for (std::size_t i = 1; i <= k; ++i) CHECK(l.forward(bad_g_a(k, i)).size() == k + 2);
  CHECK(labeling_size(l) == 62);
  Labeling greedy = canonical_hhl(d, bad_g_greedy_order(k));
  CHECK(labeling_size(greedy) == 98);
}

TEST_CASE("respects_order") {
  Labeling l(false, 2);
  l.add_hub(Side::Forward, 0, 0, 0);
  l.add_hub(Side::Forward, 0, 1, 1);
  l.add_hub(Side::Forward, 1, 1, 0);
  CHECK_FALSE(respects_order(l, Order::identity(2)));
  CHECK(respects_order(l, Order({1, 0})));
}

TEST_CASE("canonical minimality over random graphs and orders") {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const bool directed = seed % 3 == 0;
    const std::size_t n = 3 + seed % 6;
    DistMatrix d = all_pairs_distances(support::random_graph(n, 2, 3, seed, directed));
    for (int trial = 0; trial < 5; ++trial) {
      Order pi = random_order(n, rng);
      Labeling c = canonical_hhl(d, pi);
      CHECK(verify_cover(c, d).valid);
      CHECK(respects_order(c, pi));
      for (Vertex v = 0; v < n; ++v) {
        CHECK(c.contains(Side::Forward, v, v));
        CHECK(c.contains(Side::Backward, v, v));
      }
      Labeling extended = c;
      for (int extra = 0; extra < 6; ++extra) {
        const Vertex v = static_cast<Vertex>(rng() % n);
        const Vertex h = static_cast<Vertex>(rng() % n);
        if (!pi.more_important(h, v) || !d.reachable(v, h)) continue;
        extended.add_hub(Side::Forward, v, h, d.at(v, h).value());
      }
      CHECK(verify_cover(extended, d).valid);
      CHECK(is_sublabeling(c, extended));
      CHECK(is_sublabeling(c, c));
    }
  }
}

TEST_CASE("canonical labelings of different orders differ on C4") {
  DistMatrix d = all_pairs_distances(gen_cycle4(false));
  Labeling a = canonical_hhl(d, Order::identity(4));
  Labeling b = canonical_hhl(d, Order({3, 2, 1, 0}));
  CHECK_FALSE(is_sublabeling(a, b));
}

TEST_CASE("order validation and files") {
  CHECK_THROWS_AS(Order({0, 0}), Error);
  Order o = parse_order("2\n0\n1\n", 3);
  CHECK(o.sequence() == std::vector<Vertex>{2, 0, 1});
  CHECK(o.rank(2) == 0);
  CHECK(serialize_order(o) == "2\n0\n1\n");
  CHECK_THROWS_AS(parse_order("0\n1\n", 3), Error);
}

TEST_CASE("label files round trip") {
  DistMatrix d = all_pairs_distances(gen_bad_g(2));
  Labeling l = canonical_hhl(d, bad_g_better_order(2));
  const std::string text = serialize_labeling(l);
  CHECK(parse_labeling(text) == l);
  CHECK(serialize_labeling(parse_labeling(text)) == text);

  Labeling u = canonical_hhl(all_pairs_distances(gen_cycle4(false)), Order::identity(4));
  const std::string ut = serialize_labeling(u);
  CHECK(ut.rfind("l 0 0:0", 0) == 0);
  CHECK(parse_labeling(ut) == u);
  CHECK_THROWS_AS(parse_labeling("l 0 0:0\nf 1 1:0\n"), Error);
  CHECK_THROWS_AS(parse_labeling("l 0 0:0 0:0\n"), Error);
}

}  // TEST_SUITE
