#include "cowl/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cowl {

namespace {

// Per-vertex invariant used to prune the permutation search. Isomorphisms
// preserve it, so restricting to signature-compatible permutations keeps the
// minimum encoding a class invariant.
struct Signature {
    std::uint64_t weight = 0;
    int outdeg = 0, indeg = 0, deg = 0;
    std::vector<std::uint64_t> neighbor_profile;
    bool operator<(const Signature& o) const {
        return std::tie(weight, outdeg, indeg, deg, neighbor_profile) <
               std::tie(o.weight, o.outdeg, o.indeg, o.deg, o.neighbor_profile);
    }
    bool operator==(const Signature& o) const {
        return std::tie(weight, outdeg, indeg, deg, neighbor_profile) ==
               std::tie(o.weight, o.outdeg, o.indeg, o.deg, o.neighbor_profile);
    }
};

Signature vertex_signature(const WeightedOrientedGraph& d, int v) {
    Signature s;
    s.weight = d.weights[v];
    s.outdeg = popcount(d.out[v]);
    s.indeg = popcount(d.in_neighbors(v));
    s.deg = s.outdeg + s.indeg;
    for (int u : set_to_list(d.out[v])) s.neighbor_profile.push_back(2 * d.weights[u]);
    for (int u : set_to_list(d.in_neighbors(v))) s.neighbor_profile.push_back(2 * d.weights[u] + 1);
    std::sort(s.neighbor_profile.begin(), s.neighbor_profile.end());
    return s;
}

Signature vertex_signature(const SimpleGraph& g, int v) {
    Signature s;
    s.deg = popcount(g.adj[v]);
    for (int u : set_to_list(g.adj[v])) s.neighbor_profile.push_back(popcount(g.adj[u]));
    std::sort(s.neighbor_profile.begin(), s.neighbor_profile.end());
    return s;
}

// All permutations compatible with the signature blocks: vertices are listed
// in signature-sorted order and shuffled only within equal-signature blocks.
// perm[i] = vertex placed at new index i.
template <class Sig>
std::vector<std::vector<int>> signature_perms(const std::vector<Sig>& sigs) {
    int n = static_cast<int>(sigs.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return sigs[a] < sigs[b]; });
    std::vector<std::pair<int, int>> blocks;  // [start, end)
    int start = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || !(sigs[order[i]] == sigs[order[start]])) {
            blocks.push_back({start, i});
            start = i;
        }
    }
    std::vector<std::vector<int>> out;
    std::vector<int> perm = order;
    // odometer over per-block permutations
    std::vector<std::vector<int>> block_vals;
    for (auto [b, e] : blocks) block_vals.push_back(std::vector<int>(order.begin() + b, order.begin() + e));
    for (auto& bv : block_vals) std::sort(bv.begin(), bv.end());
    std::function<void(std::size_t)> rec = [&](std::size_t bi) {
        if (bi == block_vals.size()) {
            out.push_back(perm);
            return;
        }
        auto bv = block_vals[bi];
        auto [b, e] = blocks[bi];
        do {
            for (int i = b; i < e; ++i) perm[i] = bv[i - b];
            rec(bi + 1);
        } while (std::next_permutation(bv.begin(), bv.end()));
    };
    rec(0);
    return out;
}

int pair_slot(int n, int i, int j) {
    // fixed order (0,1),(0,2),...,(0,n-1),(1,2),...
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t relabel_edge_mask(int n, std::uint64_t mask, const std::vector<int>& perm) {
    // perm[i] = old vertex at new index i
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((mask >> pair_slot(n, perm[i], perm[j])) & 1) out |= std::uint64_t{1} << pair_slot(n, i, j);
    return out;
}

std::vector<std::uint64_t> encode_wog(const WeightedOrientedGraph& d, const std::vector<int>& perm) {
    int n = d.n();
    std::vector<std::uint64_t> key;
    key.push_back(static_cast<std::uint64_t>(n));
    for (int i = 0; i < n; ++i) key.push_back(d.weights[perm[i]]);
    std::uint64_t code = 0;
    int bits = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::uint64_t c = 0;
            if (d.arc(perm[i], perm[j])) c = 1;
            else if (d.arc(perm[j], perm[i])) c = 2;
            code |= c << bits;
            bits += 2;
            if (bits == 64) {
                key.push_back(code);
                code = 0;
                bits = 0;
            }
        }
    if (bits) key.push_back(code);
    return key;
}

}  // namespace

std::vector<std::uint64_t> canonical_key(const WeightedOrientedGraph& d) {
    std::vector<Signature> sigs;
    for (int v = 0; v < d.n(); ++v) sigs.push_back(vertex_signature(d, v));
    std::vector<std::uint64_t> best;
    for (const auto& perm : signature_perms(sigs)) {
        auto key = encode_wog(d, perm);
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

std::vector<std::vector<int>> graph_automorphisms(const SimpleGraph& g) {
    // candidates map each vertex class onto itself, so the identity is
    // always among them
    std::vector<Signature> sigs;
    for (int v = 0; v < g.n(); ++v) sigs.push_back(vertex_signature(g, v));
    std::map<Signature, std::vector<int>> classes;
    for (int v = 0; v < g.n(); ++v) classes[sigs[v]].push_back(v);
    std::vector<std::vector<int>> autos;
    std::vector<int> perm(g.n(), -1);
    std::vector<std::pair<std::vector<int>, std::vector<int>>> blocks;  // (slots, values)
    for (auto& [sig, verts] : classes) blocks.push_back({verts, verts});
    std::function<void(std::size_t)> rec = [&](std::size_t bi) {
        if (bi == blocks.size()) {
            bool ok = true;
            for (int i = 0; i < g.n() && ok; ++i)
                for (int j = i + 1; j < g.n() && ok; ++j)
                    if (g.edge(perm[i], perm[j]) != g.edge(i, j)) ok = false;
            if (ok) autos.push_back(perm);
            return;
        }
        auto vals = blocks[bi].second;
        std::sort(vals.begin(), vals.end());
        do {
            for (std::size_t t = 0; t < vals.size(); ++t) perm[blocks[bi].first[t]] = vals[t];
            rec(bi + 1);
        } while (std::next_permutation(vals.begin(), vals.end()));
    };
    rec(0);
    return autos;
}

SimpleGraph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<std::string> ids;
    for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i + 1));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((mask >> pair_slot(n, i, j)) & 1) edges.push_back({i, j});
    return make_simple_graph(ids, edges);
}

std::vector<std::uint64_t> simple_graph_reps(int n, bool connected_only) {
    if (n < 1 || n > 7) throw ValidationError("graph enumeration supports 1..7 vertices");
    int pairs = n * (n - 1) / 2;
    std::vector<std::uint64_t> reps;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        SimpleGraph g = graph_from_edge_mask(n, mask);
        if (connected_only && !is_connected(g)) continue;
        std::vector<Signature> sigs;
        for (int v = 0; v < n; ++v) sigs.push_back(vertex_signature(g, v));
        // the representative of an isomorphism class is the mask equal to the
        // minimum relabeling over signature-sorted placements (that minimum is
        // an orbit invariant, and the graph realizing it passes the test)
        std::uint64_t best = ~std::uint64_t{0};
        bool reject = false;
        for (const auto& perm : signature_perms(sigs)) {
            std::uint64_t r = relabel_edge_mask(n, mask, perm);
            if (r < mask) {
                reject = true;
                break;
            }
            best = std::min(best, r);
        }
        if (!reject && best == mask) reps.push_back(mask);
    }
    return reps;
}

void enumerate_over_graph(const SimpleGraph& g, std::uint64_t max_weight,
                          const std::function<void(const WeightedOrientedGraph&)>& fn) {
    int n = g.n();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.edge(i, j)) edges.push_back({i, j});
    auto autos = graph_automorphisms(g);

    std::size_t m = edges.size();
    std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << m); ++code) {
        // orientation: bit e set means edges[e] flows high->low
        auto arc_code = [&](const std::vector<int>& perm_inv, std::uint64_t c) {
            // encoding of the orientation relabeled by perm (perm_inv[old] = new)
            std::vector<std::uint64_t> enc((2 * pairs + 63) / 64, 0);
            for (std::size_t e = 0; e < m; ++e) {
                auto [a, b] = edges[e];
                int u = ((c >> e) & 1) ? b : a;  // tail
                int v = ((c >> e) & 1) ? a : b;
                int nu = perm_inv[u], nv = perm_inv[v];
                int slot = pair_slot(n, nu, nv);
                std::uint64_t dir = nu < nv ? 1 : 2;
                enc[slot / 32] |= dir << (2 * (slot % 32));
            }
            return enc;
        };
        std::vector<int> ident(n);
        std::iota(ident.begin(), ident.end(), 0);
        auto self_enc = arc_code(ident, code);
        bool canonical = true;
        for (const auto& perm : autos) {
            // perm[i] = old vertex at new index i; invert for relabeling
            std::vector<int> inv(n);
            for (int i = 0; i < n; ++i) inv[perm[i]] = i;
            if (arc_code(inv, code) < self_enc) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;

        // build the oriented graph (weights all 1 for now)
        WeightedOrientedGraph base;
        base.ids.clear();
        for (int i = 0; i < n; ++i) base.ids.push_back("v" + std::to_string(i + 1));
        base.out.assign(n, 0);
        base.weights.assign(n, 1);
        for (std::size_t e = 0; e < m; ++e) {
            auto [a, b] = edges[e];
            int u = ((code >> e) & 1) ? b : a;
            int v = ((code >> e) & 1) ? a : b;
            base.out[u] |= VertexSet{1} << v;
        }
        // orientation automorphisms
        std::vector<std::vector<int>> oriented_autos;
        for (const auto& perm : autos) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    if (base.arc(perm[i], perm[j]) != base.arc(i, j)) ok = false;
            if (ok) oriented_autos.push_back(perm);
        }
        // weights on non-sources, sources stay 1
        std::vector<int> free;
        for (int v = 0; v < n; ++v)
            if (!base.is_source(v)) free.push_back(v);
        std::vector<std::uint64_t> w(free.size(), 1);
        while (true) {
            WeightedOrientedGraph d = base;
            for (std::size_t i = 0; i < free.size(); ++i) d.weights[free[i]] = w[i];
            bool wc = true;
            for (const auto& perm : oriented_autos) {
                std::vector<std::uint64_t> relabeled(n);
                for (int i = 0; i < n; ++i) relabeled[i] = d.weights[perm[i]];
                if (relabeled < d.weights) {
                    wc = false;
                    break;
                }
            }
            if (wc) fn(d);
            // odometer
            std::size_t pos = 0;
            while (pos < w.size() && ++w[pos] > max_weight) w[pos++] = 1;
            if (pos == w.size()) break;
        }
    }
}

std::vector<WeightedOrientedGraph> census_classes(const CensusOptions& opts) {
    std::vector<WeightedOrientedGraph> out;
    for (int n = 1; n <= opts.max_n; ++n) {
        for (std::uint64_t mask : simple_graph_reps(n, opts.connected_only)) {
            SimpleGraph g = graph_from_edge_mask(n, mask);
            enumerate_over_graph(g, opts.max_weight,
                                 [&](const WeightedOrientedGraph& d) { out.push_back(d); });
        }
    }
    return out;
}

std::vector<std::vector<int>> partitions_of(int n, int r_min) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            if (static_cast<int>(cur.size()) >= r_min) out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

SimpleGraph complete_multipartite_graph(const std::vector<int>& parts) {
    std::vector<std::string> ids;
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int i = 0; i < parts[p]; ++i) {
            ids.push_back("p" + std::to_string(p + 1) + "_" + std::to_string(i + 1));
            part_of.push_back(static_cast<int>(p));
        }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (part_of[i] != part_of[j]) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    return make_simple_graph(ids, edges);
}

}  // namespace cowl
