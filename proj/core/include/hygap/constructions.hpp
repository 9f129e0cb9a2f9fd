#pragma once

#include "hygap/hypergraph.hpp"
#include "hygap/weighted.hpp"

#include <cstdint>
#include <optional>

namespace hygap {

/// K_n^r: all r-subsets of n vertices.
Hypergraph complete_hypergraph(int n, int r);
/// K_r^r, the single edge.
Hypergraph single_edge(int r);
/// Graph path with `edge_count` edges (uniformity 2).
Hypergraph path_graph(int edge_count);
/// Graph cycle C_l, l >= 3.
Hypergraph cycle_graph(int l);

/// E^r(F): each k-edge enlarged by r-k fresh degree-one vertices, disjoint
/// across edges. Base vertices keep their ids; pendants are appended
/// edge-by-edge in canonical edge order.
Hypergraph expansion(const Hypergraph& f, int r);

/// C_l^r = E^r(C_l), v = l(r-1), e = l. Accepts l >= 3; l = 2 only for
/// r >= 3 (the two edges stay distinct simple r-sets); rejects l <= 1.
Hypergraph loose_cycle(int l, int r);

/// Edge ordering certifying T is a tight r-tree (each edge after the first
/// introduces exactly one new vertex and its remainder lies inside one
/// earlier edge), or nullopt. Backtracking over orderings.
std::optional<std::vector<int>> tight_tree_check(const Hypergraph& t);

inline constexpr std::uint64_t kDefaultTensorEdgeBudget = 1'000'000;

/// G (x) H on the vertex product; an r-set of pairs is an edge iff both
/// coordinate projections are r-sets of distinct vertices forming edges.
/// Vertex (x, y) gets id x*v(H)+y.
Hypergraph tensor_product(const Hypergraph& g, const Hypergraph& h,
                          std::uint64_t edge_budget = kDefaultTensorEdgeBudget);
Hypergraph tensor_power(const Hypergraph& h, int n,
                        std::uint64_t edge_budget = kDefaultTensorEdgeBudget);

/// Weighted tensor: w(S) = w1(first-coordinate multiset) * w2(second).
/// Requires finite support in both factors.
WeightedHypergraph tensor_product(const WeightedHypergraph& g, const WeightedHypergraph& h,
                                  std::uint64_t key_budget = kDefaultTensorEdgeBudget);
WeightedHypergraph tensor_power(const WeightedHypergraph& w, int n,
                                std::uint64_t key_budget = kDefaultTensorEdgeBudget);

/// G_{n,p}^r: every r-set kept independently with probability p, driven by
/// the fixed splitmix64 stream; identical inputs give identical outputs.
Hypergraph random_hypergraph(int n, double p, int r, std::uint64_t seed);

/// w''(S) = p + (1-p) w(S) for every r-multiset S, degenerate ones included.
WeightedHypergraph mix_with_constant(const WeightedHypergraph& w, const Rat& p);

}  // namespace hygap
