#include "doctest.h"

#include <algorithm>

#include "hublab/error.hpp"
#include "hublab/generators.hpp"
#include "hublab/oracles.hpp"

using namespace hublab;

namespace {

std::size_t degree(const Graph& g, Vertex v) { return g.neighbors(v).size(); }

}  // namespace

TEST_SUITE("generators") {

TEST_CASE("family sizes") {
  CHECK(gen_bad_g(2).num_vertices() == 11);
  CHECK(gen_bad_g(3).num_vertices() == 19);
  CHECK(gen_bad_g(3).num_arcs() == 24);
  CHECK(gen_bad_w(2).num_vertices() == 20);
  CHECK(gen_bad_w(4).num_vertices() == 134);
  CHECK(gen_bad_w(4).num_arcs() == 2 * 4 * 32 + 4);
  Graph sep = gen_separator(3);
  CHECK(sep.num_vertices() == 10);
  CHECK(degree(sep, separator_hub(3)) == 6);
  std::size_t clique = 0;
  for (const Arc& a : sep.arcs()) clique += a.tail < 3 && a.head < 3 ? 1 : 0;
  CHECK(clique == 3);
  CHECK(gen_cycle4(false).num_arcs() == 4);
  CHECK(gen_cycle4(true).num_arcs() == 8);
  CHECK(all_pairs_distances(gen_cycle4(true)).at(0, 2) == Distance(2));
  CHECK_THROWS_AS(gen_bad_g(1), Error);
}

TEST_CASE("undirected reduction counts") {
  Graph k2 = reduce_vc_undirected(complete_graph(2));
  CHECK(k2.num_vertices() == 13);
  CHECK(k2.num_arcs() == 13);
  CHECK(reduce_vc_undirected(complete_graph(3)).num_vertices() == 19);
  Graph scaled = reduce_vc_undirected(complete_graph(2), true);
  CHECK(scaled.arc_length(6, 0) == 9);
  CHECK(scaled.arc_length(0, 1) == 10);
}

TEST_CASE("undirected reduction labelings") {
  for (const Graph& base : {complete_graph(2), path_graph(3), complete_graph(3), cycle_graph(5)}) {
    const auto vc = min_vertex_cover(base);
    for (bool scaled : {false, true}) {
      Graph r = reduce_vc_undirected(base, scaled);
      DistMatrix d = all_pairs_distances(r);
      Labeling l = construct_reduction_labeling_undirected(base, r, vc);
      CHECK(verify_cover(l, d).valid);
      CHECK(labeling_size(l) ==
            14 * base.num_vertices() + 1 + 3 * base.num_arcs() + vc.size());
      for (std::size_t c : reduction_crossings(base, l)) CHECK(c == 3);
      const Vertex s = static_cast<Vertex>(3 * base.num_vertices());
      for (Vertex x = 0; x < r.num_vertices(); ++x) CHECK(l.contains(Side::Forward, x, s));
    }
  }
  Graph k2 = complete_graph(2);
  CHECK_THROWS_AS(construct_reduction_labeling_undirected(k2, reduce_vc_undirected(k2), {}),
                  Error);
}

TEST_CASE("directed reduction") {
  Graph k2 = reduce_vc_directed(complete_graph(2));
  CHECK(k2.num_vertices() == 6);
  CHECK(k2.num_arcs() == 8);
  CHECK(mandatory_hub_count(k2) == 20);
  CHECK(reduce_vc_directed(complete_graph(3)).num_vertices() == 1 + 6 + 3);
  for (const Graph& base : {complete_graph(2), path_graph(3), complete_graph(3), cycle_graph(5)}) {
    const auto vc = min_vertex_cover(base);
    Graph r = reduce_vc_directed(base);
    Labeling l = construct_reduction_labeling_directed(base, r, vc);
    CHECK(verify_cover(l, all_pairs_distances(r)).valid);
    CHECK(labeling_size(l) == mandatory_hub_count(r) + vc.size());
  }
  CHECK(labeling_size(construct_reduction_labeling_directed(complete_graph(2), k2, {0})) == 21);
  CHECK_THROWS_AS(construct_reduction_labeling_directed(complete_graph(2), k2, {}), Error);
}

TEST_CASE("separator labeling") {
  for (std::size_t k : {2, 3, 4, 5}) {
    Labeling l = construct_separator_hl(k);
    CHECK(verify_cover(l, all_pairs_distances(gen_separator(k))).valid);
    CHECK(labeling_size(l) == 3 * k * (k - 1) + k * (k + 1) + 1);
    for (std::size_t star = 0; star < k; ++star) {
      CHECK(l.forward(separator_leaf(k, star, 0)).size() == 3);
    }
  }
  CHECK(labeling_size(construct_separator_hl(3)) == 31);
  CHECK(labeling_size(construct_separator_hl(4)) == 57);
}

TEST_CASE("separator crossings under every center order") {
  for (std::size_t k : {3, 4}) {
    DistMatrix d = all_pairs_distances(gen_separator(k));
    std::vector<Vertex> centers(k);
    for (Vertex c = 0; c < k; ++c) centers[c] = c;
    do {
      Labeling l = canonical_hhl(d, separator_order(k, centers));
      CHECK(separator_crossings(k, l) >= k * (k - 1) * (k - 1) / 2);
    } while (std::next_permutation(centers.begin(), centers.end()));
  }
}

TEST_CASE("C4 prime labeling") {
  Labeling l = construct_c4prime_hl();
  CHECK(labeling_size(l) == 16);
  CHECK(verify_cover(l, all_pairs_distances(gen_cycle4(true))).valid);
  CHECK(l.forward(0) == Label{{0, 0}, {3, 1}});
  CHECK(l.backward(0) == Label{{0, 0}, {1, 1}});
  CHECK_FALSE(l.forward(0) == l.backward(0));
}

TEST_CASE("random graphs") {
  CHECK(serialize_graph(gen_random(7, 10, 5, 42)) == serialize_graph(gen_random(7, 10, 5, 42)));
  CHECK(gen_random(1, 0, 3, 1).num_vertices() == 1);
  Graph g = gen_random(6, 8, 3, 9);
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_arcs() == 8);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    for (bool directed : {false, true}) {
      Graph r = gen_random(7, directed ? 12 : 9, 4, seed, directed);
      DistMatrix d = all_pairs_distances(r);
      for (Vertex u = 0; u < 7; ++u) {
        for (Vertex w = 0; w < 7; ++w) CHECK(d.reachable(u, w));
      }
    }
  }
  CHECK_THROWS_AS(gen_random(4, 2, 3, 1), Error);
  CHECK_THROWS_AS(gen_random(4, 7, 3, 1), Error);
}

}  // TEST_SUITE
