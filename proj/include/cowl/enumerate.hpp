#ifndef COWL_ENUMERATE_HPP
#define COWL_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "cowl/graph.hpp"

namespace cowl {

/// Canonical key of a weighted oriented graph under vertex relabeling:
/// minimum encoding over signature-preserving permutations. Equal keys iff
/// isomorphic.
std::vector<std::uint64_t> canonical_key(const WeightedOrientedGraph& d);

/// Automorphisms of a simple graph (signature-pruned brute force).
std::vector<std::vector<int>> graph_automorphisms(const SimpleGraph& g);

/// Edge masks (over the fixed pair order (0,1),(0,2),...,(n-2,n-1)) of one
/// representative per isomorphism class of simple graphs on exactly n
/// vertices.
std::vector<std::uint64_t> simple_graph_reps(int n, bool connected_only);

SimpleGraph graph_from_edge_mask(int n, std::uint64_t mask);

/// All orientation/weight classes over a fixed underlying graph, one
/// representative per isomorphism class; weights range over 1..max_weight
/// with sources pinned to 1. Deterministic order.
void enumerate_over_graph(const SimpleGraph& g, std::uint64_t max_weight,
                          const std::function<void(const WeightedOrientedGraph&)>& fn);

struct CensusOptions {
    int max_n = 5;
    std::uint64_t max_weight = 2;
    bool connected_only = false;
};

/// Isomorphism classes of weighted oriented graphs with 1..max_n vertices.
std::vector<WeightedOrientedGraph> census_classes(const CensusOptions& opts);

/// Sorted part-size partitions of n with at least r_min parts; each yields a
/// complete multipartite underlying graph (distinct partitions are
/// non-isomorphic).
std::vector<std::vector<int>> partitions_of(int n, int r_min);

SimpleGraph complete_multipartite_graph(const std::vector<int>& parts);

}  // namespace cowl

#endif
