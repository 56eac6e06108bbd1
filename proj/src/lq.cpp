#include "cowl/lq.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace cowl {

namespace {

// The colon (chosen : u) is generated by variables iff every chosen v has
// v:u divisible by some w:u that is a single variable, w chosen.
bool admissible_next(const std::vector<Monomial>& gens, const std::vector<int>& chosen, int u,
                     std::vector<int>* witness_vars) {
    std::size_t nv = gens[u].exps.size();
    std::vector<bool> var_quot(nv, false);
    std::vector<Monomial> quots;
    quots.reserve(chosen.size());
    for (int v : chosen) {
        Monomial q = mono_colon(gens[v], gens[u]);
        if (q.degree() == 1) {
            for (std::size_t x = 0; x < nv; ++x)
                if (q.exps[x]) var_quot[x] = true;
        }
        quots.push_back(std::move(q));
    }
    for (const Monomial& q : quots) {
        if (q.degree() <= 1) continue;  // degree 0 cannot occur between minimal generators
        bool covered = false;
        for (std::size_t x = 0; x < nv && !covered; ++x)
            if (var_quot[x] && q.exps[x]) covered = true;
        if (!covered) return false;
    }
    if (witness_vars) {
        witness_vars->clear();
        for (std::size_t x = 0; x < nv; ++x)
            if (var_quot[x]) witness_vars->push_back(static_cast<int>(x));
    }
    return true;
}

struct LqSearch {
    const std::vector<Monomial>& gens;
    std::vector<std::vector<int>> blocks;  // generator indices grouped by degree, ascending
    std::size_t budget;
    std::size_t nodes = 0;
    bool capped = false;
    std::vector<int> chosen;
    // dead states per block: bitmask of picked in-block generators
    std::vector<std::unordered_set<std::uint64_t>> dead;

    explicit LqSearch(const std::vector<Monomial>& g, std::size_t budget_) : gens(g), budget(budget_) {
        std::map<std::uint64_t, std::vector<int>> by_deg;
        for (std::size_t i = 0; i < gens.size(); ++i)
            by_deg[gens[i].degree()].push_back(static_cast<int>(i));
        for (auto& [d, idxs] : by_deg) blocks.push_back(std::move(idxs));
        dead.resize(blocks.size());
    }

    bool run(std::size_t block, std::uint64_t mask) {
        if (block == blocks.size()) return true;
        const auto& blk = blocks[block];
        if (mask == (blk.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << blk.size()) - 1)))
            return run(block + 1, 0);
        if (dead[block].count(mask)) return false;
        if (++nodes > budget) {
            capped = true;
            return false;
        }
        for (std::size_t t = 0; t < blk.size(); ++t) {
            if ((mask >> t) & 1) continue;
            int u = blk[t];
            if (!admissible_next(gens, chosen, u, nullptr)) continue;
            chosen.push_back(u);
            if (run(block, mask | (std::uint64_t{1} << t))) return true;
            chosen.pop_back();
            if (capped) return false;
        }
        dead[block].insert(mask);
        return false;
    }
};

}  // namespace

LqResult has_linear_quotients(const MonomialIdeal& I, const SearchCaps& caps) {
    LqResult res;
    if (I.gens.size() > caps.lq_max_generators) {
        res.status = SearchStatus::Capped;
        res.cap_reason = "generator count " + std::to_string(I.gens.size()) +
                         " exceeds the linear-quotient search cap " +
                         std::to_string(caps.lq_max_generators);
        return res;
    }
    if (I.gens.size() <= 1) {
        res.status = SearchStatus::Found;
        res.order = LinearQuotientOrder{};
        if (!I.gens.empty()) res.order->order.push_back(0);
        return res;
    }
    LqSearch search(I.gens, caps.node_budget);
    if (search.run(0, 0)) {
        LinearQuotientOrder lqo;
        lqo.order = search.chosen;
        std::vector<int> prefix;
        for (std::size_t i = 0; i < lqo.order.size(); ++i) {
            if (i > 0) {
                std::vector<int> w;
                admissible_next(I.gens, prefix, lqo.order[i], &w);
                lqo.colon_witnesses.push_back(std::move(w));
            }
            prefix.push_back(lqo.order[i]);
        }
        res.status = SearchStatus::Found;
        res.order = std::move(lqo);
        return res;
    }
    if (search.capped) {
        res.status = SearchStatus::Capped;
        res.cap_reason = "linear-quotient search exceeded the node budget of " +
                         std::to_string(caps.node_budget);
        return res;
    }
    res.status = SearchStatus::Exhausted;
    return res;
}

std::string verify_linear_quotient_order(const MonomialIdeal& I, const LinearQuotientOrder& lqo) {
    std::size_t m = I.gens.size();
    if (lqo.order.size() != m) return "order is not a permutation of the generators";
    std::vector<bool> seen(m, false);
    for (int v : lqo.order) {
        if (v < 0 || v >= static_cast<int>(m) || seen[v]) return "order is not a permutation of the generators";
        seen[v] = true;
    }
    if (m >= 2 && lqo.colon_witnesses.size() != m - 1)
        return "witness list length does not match the order";
    for (std::size_t i = 1; i < m; ++i) {
        std::vector<Monomial> prefix;
        for (std::size_t j = 0; j < i; ++j) prefix.push_back(I.gens[lqo.order[j]]);
        MonomialIdeal P = minimalize(I.vars, prefix);
        MonomialIdeal Q = colon(P, I.gens[lqo.order[i]]);
        std::vector<int> vars;
        for (const Monomial& q : Q.gens) {
            if (q.degree() != 1)
                return "colon at position " + std::to_string(i) + " is not generated by variables (" +
                       monomial_to_string(I, q) + ")";
            for (std::size_t x = 0; x < q.exps.size(); ++x)
                if (q.exps[x]) vars.push_back(static_cast<int>(x));
        }
        std::sort(vars.begin(), vars.end());
        std::vector<int> recorded = lqo.colon_witnesses[i - 1];
        std::sort(recorded.begin(), recorded.end());
        if (vars != recorded)
            return "recorded colon witness at position " + std::to_string(i) +
                   " does not match the recomputed colon ideal";
    }
    return "";
}

// ------------------------------------------------------------ vertex split

namespace {

struct GensLess {
    bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i].exps != b[i].exps) return a[i].exps < b[i].exps;
        return false;
    }
};

struct SplitSearch {
    const std::vector<std::string>& vars;
    std::size_t budget;
    std::size_t nodes = 0;
    bool capped = false;
    std::map<std::vector<Monomial>, std::shared_ptr<const SplitTree>, GensLess> memo_yes;
    std::set<std::vector<Monomial>, GensLess> memo_no;

    explicit SplitSearch(const std::vector<std::string>& v, std::size_t b) : vars(v), budget(b) {}

    std::shared_ptr<const SplitTree> leaf(SplitTree::Kind k, Monomial m = {}) {
        auto t = std::make_shared<SplitTree>();
        t->kind = k;
        t->leaf = std::move(m);
        return t;
    }

    // gens: minimal, canonically sorted
    std::shared_ptr<const SplitTree> run(const std::vector<Monomial>& gens) {
        if (gens.empty()) return leaf(SplitTree::Kind::LeafZero);
        if (gens.size() == 1)
            return leaf(gens[0].is_one() ? SplitTree::Kind::LeafUnit : SplitTree::Kind::LeafMonomial,
                        gens[0]);
        if (auto it = memo_yes.find(gens); it != memo_yes.end()) return it->second;
        if (memo_no.count(gens)) return nullptr;
        if (++nodes > budget) {
            capped = true;
            return nullptr;
        }
        std::size_t nv = vars.size();
        for (std::size_t x = 0; x < nv; ++x) {
            std::vector<Monomial> one, two;
            bool exact = true;  // condition (a): generators of I1 avoid x
            for (const Monomial& g : gens) {
                if (g.exps[x] > 0) {
                    if (g.exps[x] > 1) {
                        exact = false;
                        break;
                    }
                    Monomial q = g;
                    q.exps[x] = 0;
                    one.push_back(std::move(q));
                } else {
                    two.push_back(g);
                }
            }
            if (!exact || one.empty()) continue;
            // G(I) minimal implies G(I1), G(I2) minimal and the union disjoint
            std::sort(one.begin(), one.end(), canonical_less);
            std::sort(two.begin(), two.end(), canonical_less);
            MonomialIdeal I1{vars, one};
            bool contained = true;
            for (const Monomial& g : two)
                if (!membership(I1, g)) {
                    contained = false;
                    break;
                }
            if (!contained) continue;
            auto lt = run(one);
            if (capped) return nullptr;
            if (!lt) continue;
            auto rt = run(two);
            if (capped) return nullptr;
            if (!rt) continue;
            auto t = std::make_shared<SplitTree>();
            t->kind = SplitTree::Kind::Split;
            t->var = static_cast<int>(x);
            t->left = lt;
            t->right = rt;
            memo_yes[gens] = t;
            return t;
        }
        memo_no.insert(gens);
        return nullptr;
    }
};

}  // namespace

SplitResult is_vertex_splittable(const MonomialIdeal& I, const SearchCaps& caps) {
    SplitResult res;
    if (I.gens.size() > caps.split_max_generators) {
        res.status = SearchStatus::Capped;
        res.cap_reason = "generator count " + std::to_string(I.gens.size()) +
                         " exceeds the vertex-split search cap " +
                         std::to_string(caps.split_max_generators);
        return res;
    }
    SplitSearch search(I.vars, caps.node_budget);
    auto tree = search.run(I.gens);
    if (tree) {
        res.status = SearchStatus::Found;
        res.tree = tree;
        return res;
    }
    if (search.capped) {
        res.status = SearchStatus::Capped;
        res.cap_reason = "vertex-split search exceeded the node budget of " + std::to_string(caps.node_budget);
        return res;
    }
    res.status = SearchStatus::Exhausted;
    return res;
}

namespace {

std::string verify_split_node(const std::vector<std::string>& vars, const std::vector<Monomial>& gens,
                              const SplitTree& node) {
    switch (node.kind) {
        case SplitTree::Kind::LeafZero:
            if (!gens.empty()) return "zero leaf does not match a nonzero ideal";
            return "";
        case SplitTree::Kind::LeafUnit:
            if (gens.size() != 1 || !gens[0].is_one()) return "unit leaf does not match the ideal";
            return "";
        case SplitTree::Kind::LeafMonomial:
            if (gens.size() != 1 || !(gens[0] == node.leaf))
                return "monomial leaf does not match the ideal's single generator";
            return "";
        case SplitTree::Kind::Split: break;
    }
    int x = node.var;
    if (x < 0 || x >= static_cast<int>(vars.size())) return "split variable out of range";
    if (!node.left || !node.right) return "split node is missing a branch";
    std::vector<Monomial> one, two;
    for (const Monomial& g : gens) {
        if (g.exps[x] > 0) {
            if (g.exps[x] > 1)
                return "split at " + vars[x] + " violates condition (a): generator divisible by " +
                       vars[x] + "^2";
            Monomial q = g;
            q.exps[x] = 0;
            one.push_back(std::move(q));
        } else {
            two.push_back(g);
        }
    }
    if (one.empty()) return "split variable " + vars[x] + " divides no generator";
    std::sort(one.begin(), one.end(), canonical_less);
    std::sort(two.begin(), two.end(), canonical_less);
    MonomialIdeal I1{vars, one};
    for (const Monomial& g : two)
        if (!membership(I1, g))
            return "split at " + vars[x] + " violates I2 <= I1 (witness " +
                   monomial_to_string(vars, g) + ")";
    if (auto err = verify_split_node(vars, one, *node.left); !err.empty()) return err;
    return verify_split_node(vars, two, *node.right);
}

}  // namespace

std::string verify_split_tree(const MonomialIdeal& I, const SplitTree& tree) {
    return verify_split_node(I.vars, I.gens, tree);
}

}  // namespace cowl
