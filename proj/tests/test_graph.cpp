#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cowl/chordal.hpp"
#include "cowl/graph.hpp"
#include "cowl/multipartite.hpp"
#include "cowl/patterns.hpp"
#include "helpers.hpp"

using namespace cowl;
using namespace cowl::testing;

namespace {

// Independent chordality oracle: enumerate vertex subsets and check whether
// any induces a cycle of length >= 4 (every vertex degree 2, connected).
bool brute_force_chordal(const SimpleGraph& g) {
    int n = g.n();
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
        int size = popcount(s);
        if (size < 4) continue;
        bool cycle = true;
        for (int v : set_to_list(s))
            if (popcount(g.adj[v] & s) != 2) {
                cycle = false;
                break;
            }
        if (!cycle) continue;
        // connected 2-regular graph = a single cycle
        std::vector<int> verts = set_to_list(s);
        VertexSet seen = VertexSet{1} << verts[0], frontier = seen;
        while (frontier) {
            VertexSet next = 0;
            for (int v : set_to_list(frontier)) next |= g.adj[v] & s;
            frontier = next & ~seen;
            seen |= frontier;
        }
        if (seen == s) return false;
    }
    return true;
}

SimpleGraph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) edges.push_back({i, j});
    return make_simple_graph(ids, edges);
}

}  // namespace

TEST_CASE("underlying graph forgets orientation and weights") {
    auto single = wograph({"a", "b"}, {{"a", "b"}}, {1, 1});
    auto g = underlying(single);
    CHECK(g.edge(0, 1));
    CHECK(g.edge_count() == 1);

    auto empty3 = wograph({"a", "b", "c"}, {}, {1, 1, 1});
    CHECK(underlying(empty3).edge_count() == 0);

    auto ex41 = underlying(triangle_with_whiskers());
    CHECK(ex41.edge_count() == 6);
    CHECK(ex41.edge(0, 1));
    CHECK(ex41.edge(1, 2));
    CHECK(ex41.edge(2, 0));
    CHECK(ex41.edge(0, 3));
    CHECK(ex41.edge(1, 4));
    CHECK(ex41.edge(2, 5));
}

TEST_CASE("v_plus collects weighted non-sources") {
    auto all1 = wograph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {1, 1, 1});
    CHECK(v_plus(all1) == 0);

    auto ab = wograph({"a", "b"}, {{"a", "b"}}, {1, 3});
    CHECK(v_plus(ab) == 0b10);

    auto d4 = wograph({"x1", "x2", "x3"}, {{"x1", "x2"}, {"x1", "x3"}, {"x3", "x2"}}, {1, 2, 2});
    CHECK(v_plus(d4) == 0b110);
}

TEST_CASE("source weights are normalized to 1 and reported") {
    auto built = make_weighted_oriented({"a", "b"}, {{"a", "b"}}, {5, 2});
    CHECK(built.graph.weights[0] == 1);
    CHECK(built.graph.weights[1] == 2);
    CHECK(built.report.normalized_sources == std::vector<std::string>{"a"});
}

TEST_CASE("construction rejects malformed graphs") {
    CHECK_THROWS_AS(make_weighted_oriented({"a"}, {{"a", "a"}}, {1}), ValidationError);
    CHECK_THROWS_AS(make_weighted_oriented({"a", "b"}, {{"a", "b"}, {"a", "b"}}, {1, 1}), ValidationError);
    CHECK_THROWS_AS(make_weighted_oriented({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {1, 1}), ValidationError);
    CHECK_THROWS_AS(make_weighted_oriented({"a", "b"}, {{"a", "c"}}, {1, 1}), ValidationError);
    CHECK_THROWS_AS(make_weighted_oriented({"a", "b"}, {}, {1, 0}), ValidationError);
    CHECK_THROWS_AS(make_weighted_oriented({"a", "a"}, {}, {1, 1}), ValidationError);
    CHECK_THROWS_AS(make_weighted_oriented({"a b"}, {}, {1}), ValidationError);
    CHECK_THROWS_AS(make_weighted_oriented({""}, {}, {1}), ValidationError);
}

TEST_CASE("complement") {
    auto k3 = complete_graph(3);
    CHECK(complement(k3).edge_count() == 0);

    auto c4 = cycle_graph(4);
    auto c4c = complement(c4);
    CHECK(c4c.edge_count() == 2);
    CHECK(c4c.edge(0, 2));
    CHECK(c4c.edge(1, 3));

    auto c5 = cycle_graph(5);
    auto c5c = complement(c5);
    // self-complementary up to isomorphism: 2-regular, connected, 5 vertices
    for (int v = 0; v < 5; ++v) CHECK(popcount(c5c.adj[v]) == 2);
    CHECK(is_connected(c5c));

    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        auto g = graph_from_mask(5, rng() & 0x3ff);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("chordality with verifiable certificates") {
    auto k4 = complete_graph(4);
    auto ck4 = is_chordal(k4);
    CHECK(ck4.chordal);
    CHECK(verify_peo(k4, ck4.peo).empty());

    auto c4 = cycle_graph(4);
    auto cc4 = is_chordal(c4);
    CHECK(!cc4.chordal);
    CHECK(verify_chordless_cycle(c4, cc4.cycle).empty());

    auto c6c = complement(cycle_graph(6));
    auto cert = is_chordal(c6c);
    CHECK(!cert.chordal);
    CHECK(verify_chordless_cycle(c6c, cert.cycle).empty());
    CHECK(!brute_force_chordal(c6c));
}

TEST_CASE("chordality agrees with brute force on all graphs up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
            auto g = graph_from_mask(n, mask);
            auto cert = is_chordal(g);
            CHECK(cert.chordal == brute_force_chordal(g));
            CHECK(verify_chordality(g, cert).empty());
        }
    }
}

TEST_CASE("co-chordality") {
    auto twoK2 = make_simple_graph({"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
    auto cert = is_cochordal(twoK2);
    CHECK(!cert.chordal);
    CHECK(cert.cycle.size() == 4);
    CHECK(verify_chordless_cycle(complement(twoK2), cert.cycle).empty());

    CHECK(is_cochordal(complete_graph(4)).chordal);
    CHECK(is_cochordal(path_graph(4)).chordal);
}

TEST_CASE("forbidden pattern catalog") {
    auto d2 = wograph({"x", "a", "b"}, {{"x", "a"}, {"x", "b"}}, {1, 2, 2});
    auto m2 = find_forbidden(d2);
    REQUIRE(m2.has_value());
    CHECK(m2->pattern == Pattern::D2);
    CHECK(verify_pattern_match(d2, *m2).empty());

    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        auto d = random_wograph(rng, 5, 1);
        CHECK(!find_forbidden(d).has_value());
    }

    auto d4 = wograph({"x1", "x2", "x3"}, {{"x1", "x2"}, {"x1", "x3"}, {"x3", "x2"}}, {1, 2, 2});
    auto m4 = find_forbidden(d4);
    REQUIRE(m4.has_value());
    CHECK(m4->pattern == Pattern::D4);
    CHECK(verify_pattern_match(d4, *m4).empty());

    auto d4m = wograph({"x1", "x2", "x3"}, {{"x1", "x2"}, {"x1", "x3"}, {"x2", "x3"}}, {1, 2, 2});
    auto m4m = find_forbidden(d4m);
    REQUIRE(m4m.has_value());
    CHECK(m4m->pattern == Pattern::D4);

    auto d1 = wograph({"x1", "x2", "x3"}, {{"x1", "x2"}, {"x2", "x3"}}, {1, 2, 2});
    auto m1 = find_forbidden(d1);
    REQUIRE(m1.has_value());
    CHECK(m1->pattern == Pattern::D1);

    auto d3 = wograph({"x1", "x2", "x3"}, {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x1"}}, {2, 2, 2});
    auto m3 = find_forbidden(d3);
    REQUIRE(m3.has_value());
    CHECK(m3->pattern == Pattern::D3);

    // the cyclic triangle with only two weighted vertices is not in the catalog
    auto c3w = wograph({"x1", "x2", "x3"}, {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x1"}}, {1, 2, 2});
    CHECK(!find_forbidden(c3w).has_value());

    // directed path with only the sink weighted is allowed
    auto p3 = wograph({"x1", "x2", "x3"}, {{"x1", "x2"}, {"x2", "x3"}}, {1, 1, 2});
    CHECK(!find_forbidden(p3).has_value());
}

TEST_CASE("find_forbidden is induced-monotone") {
    std::mt19937_64 rng(29);
    for (int t = 0; t < 200; ++t) {
        auto d = random_wograph(rng, 6, 2);
        VertexSet s = rng() & ((VertexSet{1} << 6) - 1);
        auto sub = induced(d, s);
        if (find_forbidden(sub).has_value()) CHECK(find_forbidden(d).has_value());
    }
}

TEST_CASE("Lemma-style bound: no pattern implies at most one weighted out-neighbor") {
    // exhaustive for n <= 4, weights in {1,2}; the acceptance census extends to n <= 6
    for (int n = 2; n <= 4; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> all_pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) all_pairs.push_back({i, j});
        std::vector<std::string> ids;
        for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i));
        std::uint64_t orientations = 1;
        for (int p = 0; p < pairs; ++p) orientations *= 3;
        for (std::uint64_t code = 0; code < orientations; ++code) {
            std::vector<std::pair<std::string, std::string>> arcs;
            std::uint64_t c = code;
            for (int p = 0; p < pairs; ++p, c /= 3) {
                int dir = static_cast<int>(c % 3);
                if (dir == 1) arcs.push_back({ids[all_pairs[p].first], ids[all_pairs[p].second]});
                if (dir == 2) arcs.push_back({ids[all_pairs[p].second], ids[all_pairs[p].first]});
            }
            for (std::uint64_t wmask = 0; wmask < (std::uint64_t{1} << n); ++wmask) {
                std::vector<std::uint64_t> ws;
                for (int i = 0; i < n; ++i) ws.push_back(((wmask >> i) & 1) ? 2 : 1);
                auto d = make_weighted_oriented(ids, arcs, ws).graph;
                if (find_forbidden(d).has_value()) continue;
                VertexSet vp = v_plus(d);
                for (int x = 0; x < n; ++x) CHECK(popcount(d.out_neighbors(x) & vp) <= 1);
            }
        }
    }
}

TEST_CASE("house detection") {
    auto house = make_simple_graph({"a", "b", "c", "d", "e"},
                                   {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}});
    auto sat = find_house(house);
    REQUIRE(sat.has_value());
    CHECK(verify_house_match(house, *sat).empty());

    CHECK(is_house_free(complete_graph(5)));
    CHECK(is_house_free(path_graph(5)));
    CHECK(is_house_free(cycle_graph(5)));

    // chordal graphs never contain the house (it has an induced 4-cycle)
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
        auto g = graph_from_mask(6, rng() & 0x7fff);
        if (is_chordal(g).chordal) CHECK(is_house_free(g));
    }
}

TEST_CASE("complete multipartite recognition") {
    auto k23 = make_simple_graph({"a", "b", "c", "d", "e"},
                                 {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    auto cert = complete_multipartite(k23);
    REQUIRE(cert.has_value());
    CHECK(cert->r() == 2);
    std::vector<int> sizes;
    for (auto p : cert->parts) sizes.push_back(popcount(p));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{2, 3});
    CHECK(verify_multipartite(k23, *cert).empty());

    auto p3 = path_graph(3);
    auto cp3 = complete_multipartite(p3);
    REQUIRE(cp3.has_value());
    CHECK(cp3->r() == 2);
    CHECK(verify_multipartite(p3, *cp3).empty());

    CHECK(!complete_multipartite(path_graph(4)).has_value());
}

TEST_CASE("induced subgraphs") {
    auto d4 = wograph({"x1", "x2", "x3"}, {{"x1", "x2"}, {"x1", "x3"}, {"x3", "x2"}}, {1, 2, 2});
    CHECK(induced(d4, 0b111) == d4);

    auto sub = induced(d4, 0b011);
    CHECK(sub.n() == 2);
    CHECK(sub.arc(0, 1));
    CHECK(sub.weights[1] == 2);

    auto ex41 = triangle_with_whiskers();
    auto tri = induced(ex41, 0b111);
    CHECK(tri.arc_count() == 3);
    CHECK(tri.weights == std::vector<std::uint64_t>{1, 1, 1});

    CHECK_THROWS_AS(induced(d4, 0b1000), ValidationError);

    // weights inherited verbatim: x2 is a source in the subgraph but keeps weight 2
    auto keep = induced(d4, 0b110);
    CHECK(keep.weights[0] == 2);
    CHECK(v_plus(keep) == 0b01);  // only x2 (head of x3->x2) counts
}

TEST_CASE("h_graph keeps only weight-1 heads") {
    auto all1 = wograph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {1, 1, 1});
    CHECK(h_graph(all1) == underlying(all1));

    auto ab2 = wograph({"a", "b"}, {{"a", "b"}}, {1, 2});
    CHECK(h_graph(ab2).edge_count() == 0);

    auto ex41 = triangle_with_whiskers();
    auto h = h_graph(ex41);
    CHECK(h.edge_count() == 3);
    CHECK(h.edge(0, 1));
    CHECK(h.edge(1, 2));
    CHECK(h.edge(2, 0));

    // h_graph is always a subgraph of the underlying graph
    std::mt19937_64 rng(53);
    for (int t = 0; t < 50; ++t) {
        auto d = random_wograph(rng, 5, 3);
        auto hh = h_graph(d);
        auto uu = underlying(d);
        for (int u = 0; u < 5; ++u) CHECK((hh.adj[u] & ~uu.adj[u]) == 0);
    }
}

TEST_CASE("minimal vertex covers") {
    auto k3 = complete_graph(3);
    CHECK(is_minimal_vertex_cover(k3, 0b011));
    auto c4 = cycle_graph(4);
    CHECK(is_minimal_vertex_cover(c4, 0b0101));
    CHECK(!is_minimal_vertex_cover(c4, 0b0111));
}

TEST_CASE("pattern formulas") {
    CHECK(pattern_power_regularity(Pattern::D4, 1, 2, 2) == 4);
    CHECK(pattern_power_regularity(Pattern::D4, 2, 2, 2) == 7);
    CHECK(pattern_power_regularity(Pattern::D2, 2, 2, 3) == 9);
    CHECK(pattern_power_regularity(Pattern::D1, 1, 2, 2) == 4);
    CHECK(pattern_power_regularity(Pattern::D3, 2, 3, 3) == 10);
    CHECK_THROWS_AS(pattern_power_regularity(Pattern::D1, 1, 1, 2), ValidationError);

    FormulaEvidence fe{Pattern::D4, 2, 2, 2, 7};
    CHECK(verify_formula_evidence(fe).empty());
    fe.predicted_regularity = 8;
    CHECK(!verify_formula_evidence(fe).empty());
}

TEST_CASE("pattern instances expose the expected edge ideals") {
    auto i4 = edge_ideal(pattern_instance(Pattern::D4, 2, 3));
    CHECK(i4 == make_ideal({"x1", "x2", "x3"}, {"x1*x2^2", "x1*x3^3", "x3*x2^2"}));
    auto i1 = edge_ideal(pattern_instance(Pattern::D1, 2, 2));
    CHECK(i1 == make_ideal({"x1", "x2", "x3"}, {"x1*x2^2", "x2*x3^2"}));
    auto i3 = edge_ideal(pattern_instance(Pattern::D3, 2, 2));
    CHECK(i3 == make_ideal({"x1", "x2", "x3"}, {"x1*x2^2", "x2*x3^2", "x3*x1^2"}));
    for (auto p : {Pattern::D1, Pattern::D2, Pattern::D3, Pattern::D4})
        CHECK(find_forbidden(pattern_instance(p, 2, 2))->pattern == p);
}
