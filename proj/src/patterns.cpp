#include "cowl/patterns.hpp"

#include <algorithm>
#include <array>

namespace cowl {

std::string pattern_name(Pattern p) {
    switch (p) {
        case Pattern::D1: return "D1";
        case Pattern::D2: return "D2";
        case Pattern::D3: return "D3";
        case Pattern::D4: return "D4";
        case Pattern::House: return "House";
    }
    return "?";
}

std::optional<Pattern> pattern_from_name(const std::string& s) {
    if (s == "D1") return Pattern::D1;
    if (s == "D2") return Pattern::D2;
    if (s == "D3") return Pattern::D3;
    if (s == "D4") return Pattern::D4;
    if (s == "House") return Pattern::House;
    return std::nullopt;
}

const std::vector<CatalogEntry>& forbidden_catalog() {
    static const std::vector<CatalogEntry> catalog = {
        {Pattern::D1, {{0, 1}, {1, 2}}, {0, 2, 2}},
        {Pattern::D2, {{0, 1}, {0, 2}}, {0, 2, 2}},
        {Pattern::D3, {{0, 1}, {1, 2}, {2, 0}}, {2, 2, 2}},
        {Pattern::D4, {{0, 1}, {0, 2}, {2, 1}}, {0, 2, 2}},
        {Pattern::D4, {{0, 1}, {0, 2}, {1, 2}}, {0, 2, 2}},
    };
    return catalog;
}

namespace {

bool matches_entry(const WeightedOrientedGraph& d, const CatalogEntry& e, const std::array<int, 3>& t) {
    for (int i = 0; i < 3; ++i)
        if (e.min_weight[i] != 0 && d.weights[t[i]] < e.min_weight[i]) return false;
    // induced comparison: the arcs among {t0,t1,t2} must be exactly the template's
    int want[3][3] = {};
    for (auto [a, b] : e.arcs) want[a][b] = 1;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            if (a == b) continue;
            if (d.arc(t[a], t[b]) != (want[a][b] != 0)) return false;
        }
    return true;
}

}  // namespace

std::optional<PatternMatch> find_forbidden(const WeightedOrientedGraph& d) {
    int n = d.n();
    std::array<int, 3> t;
    for (t[0] = 0; t[0] < n; ++t[0])
        for (t[1] = 0; t[1] < n; ++t[1]) {
            if (t[1] == t[0]) continue;
            for (t[2] = 0; t[2] < n; ++t[2]) {
                if (t[2] == t[0] || t[2] == t[1]) continue;
                for (const CatalogEntry& e : forbidden_catalog())
                    if (matches_entry(d, e, t))
                        return PatternMatch{e.tag, {t[0], t[1], t[2]}};
            }
        }
    return std::nullopt;
}

namespace {

// house edges on local vertices 0..4
const std::vector<std::pair<int, int>> kHouseEdges = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 4}};

bool is_house_at(const SimpleGraph& g, const std::array<int, 5>& t) {
    bool want[5][5] = {};
    for (auto [a, b] : kHouseEdges) want[a][b] = want[b][a] = true;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            if (g.edge(t[a], t[b]) != want[a][b]) return false;
    return true;
}

}  // namespace

std::optional<PatternMatch> find_house(const SimpleGraph& g) {
    int n = g.n();
    if (n < 5) return std::nullopt;
    // choose 5 vertices, then try orderings; cheap at desk scale
    std::array<int, 5> t;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int dd = c + 1; dd < n; ++dd)
                    for (int e = dd + 1; e < n; ++e) {
                        std::array<int, 5> sub = {a, b, c, dd, e};
                        std::array<int, 5> perm = {0, 1, 2, 3, 4};
                        std::sort(perm.begin(), perm.end());
                        do {
                            for (int i = 0; i < 5; ++i) t[i] = sub[perm[i]];
                            if (is_house_at(g, t))
                                return PatternMatch{Pattern::House, {t[0], t[1], t[2], t[3], t[4]}};
                        } while (std::next_permutation(perm.begin(), perm.end()));
                    }
    return std::nullopt;
}

bool is_house_free(const SimpleGraph& g) { return !find_house(g).has_value(); }

std::string verify_pattern_match(const WeightedOrientedGraph& d, const PatternMatch& pm) {
    if (pm.pattern == Pattern::House)
        return "house witness must be checked against a simple graph";
    if (pm.witness.size() != 3) return "pattern witness must list 3 vertices";
    std::array<int, 3> t;
    VertexSet seen = 0;
    for (int i = 0; i < 3; ++i) {
        int v = pm.witness[i];
        if (v < 0 || v >= d.n()) return "pattern witness references an unknown vertex";
        if ((seen >> v) & 1) return "pattern witness repeats a vertex";
        seen |= VertexSet{1} << v;
        t[i] = v;
    }
    for (const CatalogEntry& e : forbidden_catalog())
        if (e.tag == pm.pattern && matches_entry(d, e, t)) return "";
    return "witness does not realize pattern " + pattern_name(pm.pattern);
}

long long pattern_power_regularity(Pattern p, std::uint64_t k, std::uint64_t w2, std::uint64_t w3) {
    if (w2 < 2 || w3 < 2) throw ValidationError("pattern weights must be >= 2");
    if (k < 1) throw ValidationError("pattern power requires k >= 1");
    long long w = static_cast<long long>(std::max(w2, w3));
    long long shift = static_cast<long long>(k - 1) * (w + 1);
    switch (p) {
        case Pattern::D4:
            return shift + static_cast<long long>(w2 + w3);
        case Pattern::D1:
            return static_cast<long long>(1 + w2 + w3) - 1 + shift;
        case Pattern::D2:
        case Pattern::D3:
            return static_cast<long long>(w2 + w3) + shift;
        default:
            throw ValidationError("no power-regularity formula for this pattern");
    }
}

WeightedOrientedGraph pattern_instance(Pattern p, std::uint64_t w2, std::uint64_t w3) {
    if (w2 < 2 || w3 < 2) throw ValidationError("pattern weights must be >= 2");
    std::vector<std::string> ids = {"x1", "x2", "x3"};
    std::vector<std::pair<std::string, std::string>> arcs;
    std::vector<std::uint64_t> weights = {1, w2, w3};
    switch (p) {
        case Pattern::D1: arcs = {{"x1", "x2"}, {"x2", "x3"}}; break;
        case Pattern::D2: arcs = {{"x1", "x2"}, {"x1", "x3"}}; break;
        case Pattern::D3:
            arcs = {{"x1", "x2"}, {"x2", "x3"}, {"x3", "x1"}};
            weights[0] = 2;
            break;
        case Pattern::D4: arcs = {{"x1", "x2"}, {"x1", "x3"}, {"x3", "x2"}}; break;
        default: throw ValidationError("not a three-vertex catalog pattern");
    }
    return make_weighted_oriented(ids, arcs, weights).graph;
}

std::string verify_formula_evidence(const FormulaEvidence& fe) {
    long long expect;
    try {
        expect = pattern_power_regularity(fe.pattern, fe.k, fe.w2, fe.w3);
    } catch (const ValidationError& e) {
        return e.what();
    }
    if (expect != fe.predicted_regularity)
        return "predicted regularity " + std::to_string(fe.predicted_regularity) +
               " does not match the closed form " + std::to_string(expect);
    return "";
}

std::string verify_house_match(const SimpleGraph& g, const PatternMatch& pm) {
    if (pm.pattern != Pattern::House) return "certificate is not a house witness";
    if (pm.witness.size() != 5) return "house witness must list 5 vertices";
    std::array<int, 5> t;
    VertexSet seen = 0;
    for (int i = 0; i < 5; ++i) {
        int v = pm.witness[i];
        if (v < 0 || v >= g.n()) return "house witness references an unknown vertex";
        if ((seen >> v) & 1) return "house witness repeats a vertex";
        seen |= VertexSet{1} << v;
        t[i] = v;
    }
    if (!is_house_at(g, t)) return "witness does not realize the house";
    return "";
}

}  // namespace cowl
