#ifndef COWL_GRAPH_HPP
#define COWL_GRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cowl/base.hpp"
#include "cowl/ideal.hpp"

namespace cowl {

// Vertex sets are bitmasks; graphs are capped at 64 vertices, far beyond the
// desk scale everything here runs at.
using VertexSet = std::uint64_t;

inline int popcount(VertexSet s) { return __builtin_popcountll(s); }

struct SimpleGraph {
    std::vector<std::string> ids;
    std::vector<VertexSet> adj;  // adj[v] excludes v itself

    int n() const { return static_cast<int>(ids.size()); }
    bool edge(int u, int v) const { return (adj[u] >> v) & 1; }
    void add_edge(int u, int v) {
        adj[u] |= VertexSet{1} << v;
        adj[v] |= VertexSet{1} << u;
    }
    std::size_t edge_count() const;
    bool operator==(const SimpleGraph& o) const = default;
};

SimpleGraph make_simple_graph(std::vector<std::string> ids,
                              const std::vector<std::pair<int, int>>& edges);

SimpleGraph complement(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

/// True iff C meets every edge and no proper subset of C does.
bool is_minimal_vertex_cover(const SimpleGraph& g, VertexSet cover);

struct WeightedOrientedGraph {
    std::vector<std::string> ids;
    std::vector<VertexSet> out;           // out[v]: heads of arcs leaving v
    std::vector<std::uint64_t> weights;   // all >= 1

    int n() const { return static_cast<int>(ids.size()); }
    bool arc(int u, int v) const { return (out[u] >> v) & 1; }
    VertexSet in_neighbors(int v) const {
        VertexSet s = 0;
        for (int u = 0; u < n(); ++u)
            if (arc(u, v)) s |= VertexSet{1} << u;
        return s;
    }
    VertexSet out_neighbors(int v) const { return out[v]; }
    bool is_source(int v) const { return in_neighbors(v) == 0; }
    std::size_t arc_count() const;
    std::vector<std::pair<int, int>> arcs() const;
    bool operator==(const WeightedOrientedGraph& o) const = default;
};

struct ConstructionReport {
    // Source vertices whose weight was forced to 1 on construction.
    std::vector<std::string> normalized_sources;
};

struct BuiltGraph {
    WeightedOrientedGraph graph;
    ConstructionReport report;
};

/// Validates (no loops, no duplicate or anti-parallel arcs, weights >= 1,
/// ids nonempty without whitespace) and normalizes source weights to 1.
BuiltGraph make_weighted_oriented(std::vector<std::string> ids,
                                  const std::vector<std::pair<std::string, std::string>>& arcs,
                                  const std::vector<std::uint64_t>& weights);

SimpleGraph underlying(const WeightedOrientedGraph& d);

/// { x : weight(x) > 1 and x has an incoming arc }
VertexSet v_plus(const WeightedOrientedGraph& d);

/// Graph of the degree-2 minimal generators of I(D): {x,y} is an edge iff
/// (x,y) is an arc with w(y)=1 or (y,x) is an arc with w(x)=1. Vertex set is
/// all of V(D).
SimpleGraph h_graph(const WeightedOrientedGraph& d);

/// Induced subgraph on S. Weights are inherited verbatim; no source
/// re-normalization, so V+ of the result reflects the subgraph's in-degrees.
WeightedOrientedGraph induced(const WeightedOrientedGraph& d, VertexSet s);

MonomialIdeal edge_ideal(const WeightedOrientedGraph& d);

std::vector<int> set_to_list(VertexSet s);

}  // namespace cowl

#endif
