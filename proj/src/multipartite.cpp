#include "cowl/multipartite.hpp"

#include <algorithm>

namespace cowl {

std::optional<MultipartiteCertificate> complete_multipartite(const SimpleGraph& g) {
    if (g.n() == 0) return MultipartiteCertificate{};
    SimpleGraph c = complement(g);
    std::vector<VertexSet> parts;
    VertexSet assigned = 0;
    for (int v = 0; v < g.n(); ++v) {
        if ((assigned >> v) & 1) continue;
        VertexSet comp = VertexSet{1} << v, frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for (int u : set_to_list(frontier)) next |= c.adj[u];
            frontier = next & ~comp;
            comp |= frontier;
        }
        // the component must be independent in G
        std::vector<int> members = set_to_list(comp);
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (g.edge(members[i], members[j])) return std::nullopt;
        parts.push_back(comp);
        assigned |= comp;
    }
    return MultipartiteCertificate{std::move(parts)};
}

std::string verify_multipartite(const SimpleGraph& g, const MultipartiteCertificate& cert) {
    VertexSet all = g.n() == 64 ? ~VertexSet{0} : ((VertexSet{1} << g.n()) - 1);
    VertexSet seen = 0;
    for (VertexSet p : cert.parts) {
        if (p == 0) return "empty part";
        if (p & ~all) return "part references an unknown vertex";
        if (p & seen) return "parts are not disjoint";
        seen |= p;
    }
    if (seen != all) return "parts do not cover the vertex set";
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            bool same_part = false;
            for (VertexSet p : cert.parts)
                if (((p >> u) & 1) && ((p >> v) & 1)) same_part = true;
            if (same_part && g.edge(u, v))
                return "edge {" + g.ids[u] + "," + g.ids[v] + "} inside a part";
            if (!same_part && !g.edge(u, v))
                return "missing cross-part edge {" + g.ids[u] + "," + g.ids[v] + "}";
        }
    return "";
}

}  // namespace cowl
