#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hublab/graph.hpp"
#include "hublab/labeling.hpp"

namespace hublab {

// Vertex numbering is fixed per family so that lowest-id tie-breaking
// reproduces the intended greedy orders.

/// a_i = i-1 (i = 1..k), b_j = k + j-1 (j = 1..k+1),
/// c_ij = 2k+1 + (i-1)k + (j-1) for i = 1..k+1, j = 1..k.
/// Arcs a_i -> b_j and b_i -> c_ij, all of length 1.
Graph gen_bad_g(std::size_t k, bool directed = true);
Vertex bad_g_a(std::size_t k, std::size_t i);
Vertex bad_g_b(std::size_t k, std::size_t j);
Vertex bad_g_c(std::size_t k, std::size_t i, std::size_t j);

/// The order a's, b's, c's in id order (what the greedy runs produce).
Order bad_g_greedy_order(std::size_t k);
/// The order b's, a's, c's.
Order bad_g_better_order(std::size_t k);

/// a = 0, b = 1, c_i = 2 + (i-1), d_ij = 2 + k + (i-1)l + (j-1) with l = 2k^2.
/// Edges a-d_ij (length 3), b-c_i and c_i-d_ij (length 2).
Graph gen_bad_w(std::size_t k);
std::size_t bad_w_l(std::size_t k);
Vertex bad_w_c(std::size_t k, std::size_t i);
Vertex bad_w_d(std::size_t k, std::size_t i, std::size_t j);

/// Order a, b, c's, d's.
Order bad_w_better_order(std::size_t k);

/// Star centers 0..k-1 forming a clique; leaves of star i are
/// k + i(k-1) + j for j = 0..k-2; s = k^2 joined to every leaf. Unit lengths.
Graph gen_separator(std::size_t k);
Vertex separator_leaf(std::size_t k, std::size_t star, std::size_t j);
Vertex separator_hub(std::size_t k);
/// Star of a leaf or center; k for s.
std::size_t separator_star(std::size_t k, Vertex v);

/// Cycle v0 v1 v2 v3 with unit lengths; the directed version has both arcs.
Graph gen_cycle4(bool directed);

/// Undirected reduction: v_1 = 3v, v_2 = 3v+1, v_3 = 3v+2, hub s = 3|V|,
/// then 3|V| leaves of s. With `scaled`, every length is 10 except s-v_1
/// which is 9, making shortest paths unique.
Graph reduce_vc_undirected(const Graph& base, bool scaled = false);

/// Labeling of size 14|V| + 1 + 3|E| + |vc| for the reduction of `base`.
/// Throws NotAVertexCover.
Labeling construct_reduction_labeling_undirected(const Graph& base, const Graph& reduced,
                                                 const std::vector<Vertex>& vc);

/// Hub entries linking the gadgets of u and v, for each base edge {u,v} in
/// arc order.
std::vector<std::size_t> reduction_crossings(const Graph& base, const Labeling& l);

/// Directed reduction: w = 0, v_1 = 1 + 2v, v_2 = 2 + 2v, then one vertex per
/// base edge in arc order. Unit lengths.
Graph reduce_vc_directed(const Graph& base);

/// Mandatory hubs: 2|V'| + |A'|.
std::size_t mandatory_hub_count(const Graph& reduced);

/// Mandatory hubs plus v_2 in L_f(w) for every v in vc. Throws
/// NotAVertexCover.
Labeling construct_reduction_labeling_directed(const Graph& base, const Graph& reduced,
                                               const std::vector<Vertex>& vc);

/// L(s) = {s}; leaves {leaf, s, own center}; centers {center, s} plus the
/// other centers. Size 3k(k-1) + k(k+1) + 1.
Labeling construct_separator_hl(std::size_t k);

/// Leaf/foreign-center hub entries of a separator labeling.
std::size_t separator_crossings(std::size_t k, const Labeling& l);

/// Order with the star centers in the given sequence, then s, then leaves.
Order separator_order(std::size_t k, const std::vector<Vertex>& centers);

/// Size-16 labeling of the directed 4-cycle.
Labeling construct_c4prime_hl();

/// Connected graph with n vertices and m edges (or arcs), lengths in
/// 1..maxlen. Directed graphs are strongly connected. Throws InfeasibleParams.
Graph gen_random(std::size_t n, std::size_t m, Length maxlen, std::uint64_t seed,
                 bool directed = false);

/// Base graphs used by the reduction checks.
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n, Length length = 1);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

}  // namespace hublab
