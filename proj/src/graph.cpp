#include "cowl/graph.hpp"

#include <algorithm>
#include <map>

namespace cowl {

std::vector<int> set_to_list(VertexSet s) {
    std::vector<int> out;
    for (int v = 0; s; ++v, s >>= 1)
        if (s & 1) out.push_back(v);
    return out;
}

std::size_t SimpleGraph::edge_count() const {
    std::size_t twice = 0;
    for (VertexSet row : adj) twice += static_cast<std::size_t>(popcount(row));
    return twice / 2;
}

SimpleGraph make_simple_graph(std::vector<std::string> ids,
                              const std::vector<std::pair<int, int>>& edges) {
    if (ids.size() > 64) throw ValidationError("graphs are limited to 64 vertices");
    SimpleGraph g;
    g.ids = std::move(ids);
    g.adj.assign(g.ids.size(), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw ValidationError("edge endpoint out of range");
        if (u == v) throw ValidationError("loop edge at vertex " + g.ids[u]);
        g.add_edge(u, v);
    }
    return g;
}

SimpleGraph complement(const SimpleGraph& g) {
    SimpleGraph c;
    c.ids = g.ids;
    c.adj.assign(g.ids.size(), 0);
    VertexSet all = g.n() == 64 ? ~VertexSet{0} : ((VertexSet{1} << g.n()) - 1);
    for (int v = 0; v < g.n(); ++v) c.adj[v] = all & ~g.adj[v] & ~(VertexSet{1} << v);
    return c;
}

bool is_connected(const SimpleGraph& g) {
    if (g.n() == 0) return true;
    VertexSet seen = 1, frontier = 1;
    while (frontier) {
        VertexSet next = 0;
        for (int v : set_to_list(frontier)) next |= g.adj[v];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return popcount(seen) == g.n();
}

bool is_minimal_vertex_cover(const SimpleGraph& g, VertexSet cover) {
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.edge(u, v) && !((cover >> u) & 1) && !((cover >> v) & 1)) return false;
    // minimality: dropping any cover vertex must expose an edge
    for (int c : set_to_list(cover)) {
        VertexSet smaller = cover & ~(VertexSet{1} << c);
        bool exposed = false;
        for (int v : set_to_list(g.adj[c]))
            if (!((smaller >> v) & 1)) {
                exposed = true;
                break;
            }
        if (!exposed) return false;
    }
    return true;
}

std::size_t WeightedOrientedGraph::arc_count() const {
    std::size_t total = 0;
    for (VertexSet row : out) total += static_cast<std::size_t>(popcount(row));
    return total;
}

std::vector<std::pair<int, int>> WeightedOrientedGraph::arcs() const {
    std::vector<std::pair<int, int>> list;
    for (int u = 0; u < n(); ++u)
        for (int v : set_to_list(out[u])) list.emplace_back(u, v);
    return list;
}

BuiltGraph make_weighted_oriented(std::vector<std::string> ids,
                                  const std::vector<std::pair<std::string, std::string>>& arcs,
                                  const std::vector<std::uint64_t>& weights) {
    if (ids.size() > 64) throw ValidationError("graphs are limited to 64 vertices");
    if (weights.size() != ids.size()) throw ValidationError("weight list does not match vertex list");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        const std::string& id = ids[i];
        if (id.empty()) throw ValidationError("empty vertex id");
        if (id.find_first_of(" \t\r\n") != std::string::npos)
            throw ValidationError("vertex id '" + id + "' contains whitespace");
        if (!index.emplace(id, static_cast<int>(i)).second)
            throw ValidationError("duplicate vertex id '" + id + "'");
    }
    WeightedOrientedGraph d;
    d.ids = std::move(ids);
    d.out.assign(d.ids.size(), 0);
    d.weights = weights;
    for (std::size_t i = 0; i < d.weights.size(); ++i)
        if (d.weights[i] < 1)
            throw ValidationError("vertex '" + d.ids[i] + "' has weight < 1");
    for (const auto& [tail, head] : arcs) {
        auto ti = index.find(tail), hi = index.find(head);
        if (ti == index.end()) throw ValidationError("arc references unknown vertex '" + tail + "'");
        if (hi == index.end()) throw ValidationError("arc references unknown vertex '" + head + "'");
        int u = ti->second, v = hi->second;
        if (u == v) throw ValidationError("loop arc (" + tail + ", " + head + ")");
        if (d.arc(u, v)) throw ValidationError("duplicate arc (" + tail + ", " + head + ")");
        if (d.arc(v, u))
            throw ValidationError("anti-parallel pair (" + tail + ", " + head + ") and (" + head + ", " + tail + ")");
        d.out[u] |= VertexSet{1} << v;
    }
    ConstructionReport report;
    for (int v = 0; v < d.n(); ++v) {
        if (d.is_source(v) && d.weights[v] != 1) {
            d.weights[v] = 1;
            report.normalized_sources.push_back(d.ids[v]);
        }
    }
    return {std::move(d), std::move(report)};
}

SimpleGraph underlying(const WeightedOrientedGraph& d) {
    SimpleGraph g;
    g.ids = d.ids;
    g.adj.assign(d.ids.size(), 0);
    for (int u = 0; u < d.n(); ++u)
        for (int v : set_to_list(d.out[u])) g.add_edge(u, v);
    return g;
}

VertexSet v_plus(const WeightedOrientedGraph& d) {
    VertexSet s = 0;
    for (int v = 0; v < d.n(); ++v)
        if (d.weights[v] > 1 && !d.is_source(v)) s |= VertexSet{1} << v;
    return s;
}

SimpleGraph h_graph(const WeightedOrientedGraph& d) {
    SimpleGraph g;
    g.ids = d.ids;
    g.adj.assign(d.ids.size(), 0);
    for (int u = 0; u < d.n(); ++u)
        for (int v : set_to_list(d.out[u]))
            if (d.weights[v] == 1) g.add_edge(u, v);
    return g;
}

WeightedOrientedGraph induced(const WeightedOrientedGraph& d, VertexSet s) {
    std::vector<int> keep = set_to_list(s);
    for (int v : keep)
        if (v >= d.n()) throw ValidationError("induced subgraph on unknown vertex");
    WeightedOrientedGraph r;
    std::vector<int> newindex(d.n(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        newindex[keep[i]] = static_cast<int>(i);
        r.ids.push_back(d.ids[keep[i]]);
        r.weights.push_back(d.weights[keep[i]]);
    }
    r.out.assign(keep.size(), 0);
    for (int u : keep)
        for (int v : set_to_list(d.out[u] & s))
            r.out[newindex[u]] |= VertexSet{1} << newindex[v];
    return r;
}

MonomialIdeal edge_ideal(const WeightedOrientedGraph& d) {
    std::vector<Monomial> gens;
    for (int u = 0; u < d.n(); ++u)
        for (int v : set_to_list(d.out[u])) {
            Monomial m(d.ids.size());
            if (d.weights[v] > std::numeric_limits<Exponent>::max())
                throw OverflowError("weight too large for exponent type");
            m.exps[u] = checked_add_exp(m.exps[u], 1);
            m.exps[v] = checked_add_exp(m.exps[v], static_cast<Exponent>(d.weights[v]));
            gens.push_back(std::move(m));
        }
    return minimalize(d.ids, std::move(gens));
}

}  // namespace cowl
