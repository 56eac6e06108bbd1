#ifndef COWL_TEST_HELPERS_HPP
#define COWL_TEST_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "cowl/graph.hpp"
#include "cowl/ideal.hpp"

namespace cowl::testing {

inline MonomialIdeal ideal(std::vector<std::string> vars, std::vector<std::string> gens) {
    return make_ideal(std::move(vars), gens);
}

inline WeightedOrientedGraph wograph(std::vector<std::string> ids,
                                     std::vector<std::pair<std::string, std::string>> arcs,
                                     std::vector<std::uint64_t> weights) {
    return make_weighted_oriented(std::move(ids), arcs, weights).graph;
}

// Example 4.1: oriented triangle x1->x2->x3->x1 with weighted whiskers
// (x1,x4), (x2,x5), (x3,x6), w4=w5=w6=2. Edge ideal
// (x1x2, x2x3, x3x1, x1x4^2, x2x5^2, x3x6^2).
inline WeightedOrientedGraph triangle_with_whiskers() {
    return wograph({"x1", "x2", "x3", "x4", "x5", "x6"},
                   {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x1"}, {"x1", "x4"}, {"x2", "x5"}, {"x3", "x6"}},
                   {1, 1, 1, 2, 2, 2});
}

inline SimpleGraph cycle_graph(int n) {
    std::vector<std::string> ids;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        ids.push_back("v" + std::to_string(i));
        edges.push_back({i, (i + 1) % n});
    }
    return make_simple_graph(ids, edges);
}

inline SimpleGraph path_graph(int n) {
    std::vector<std::string> ids;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        ids.push_back("v" + std::to_string(i));
        if (i) edges.push_back({i - 1, i});
    }
    return make_simple_graph(ids, edges);
}

inline SimpleGraph complete_graph(int n) {
    std::vector<std::string> ids;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        ids.push_back("v" + std::to_string(i));
        for (int j = 0; j < i; ++j) edges.push_back({j, i});
    }
    return make_simple_graph(ids, edges);
}

// Random weighted oriented graph on n vertices, arc probability ~1/2,
// weights uniform in [1, maxw]; sources come out weight 1 by normalization.
inline WeightedOrientedGraph random_wograph(std::mt19937_64& rng, int n, std::uint64_t maxw) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> arcs;
    std::uniform_int_distribution<int> coin(0, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int c = coin(rng);
            if (c == 1) arcs.push_back({ids[i], ids[j]});
            if (c == 2) arcs.push_back({ids[j], ids[i]});
        }
    std::uniform_int_distribution<std::uint64_t> wdist(1, maxw);
    std::vector<std::uint64_t> ws;
    for (int i = 0; i < n; ++i) ws.push_back(wdist(rng));
    return make_weighted_oriented(ids, arcs, ws).graph;
}

}  // namespace cowl::testing

#endif
