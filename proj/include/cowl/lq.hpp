#ifndef COWL_LQ_HPP
#define COWL_LQ_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cowl/ideal.hpp"

namespace cowl {

struct SearchCaps {
    std::size_t lq_max_generators = 24;
    std::size_t split_max_generators = 20;
    std::size_t node_budget = 4'000'000;
};

enum class SearchStatus { Found, Exhausted, Capped };

/// An admissible order of the minimal generators: for each position i >= 2,
/// the colon ideal (u_1,...,u_{i-1}) : u_i is generated by the recorded
/// variables (all of degree one).
struct LinearQuotientOrder {
    std::vector<int> order;                       // indices into the ideal's generator list
    std::vector<std::vector<int>> colon_witnesses;  // variable sets, positions 1..m-1
    bool operator==(const LinearQuotientOrder& o) const = default;
};

struct LqResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<LinearQuotientOrder> order;
    std::string cap_reason;
};

/// Exhaustive backtracking over degree-increasing orders (no admissible order
/// is lost by the restriction), candidates tried in canonical generator
/// order, dead prefixes memoized. Deterministic.
LqResult has_linear_quotients(const MonomialIdeal& I, const SearchCaps& caps = {});

std::string verify_linear_quotient_order(const MonomialIdeal& I, const LinearQuotientOrder& lqo);

/// Vertex-splittable certificate. At a Split node with ideal I, the variable
/// x yields I1 = (u/x : x | u), I2 = (u : x does not divide u); admissibility
/// needs I1 free of x, I2 contained in I1, and both branches splittable.
struct SplitTree {
    enum class Kind { LeafZero, LeafUnit, LeafMonomial, Split };
    Kind kind = Kind::LeafZero;
    Monomial leaf;  // LeafMonomial
    int var = -1;   // Split
    std::shared_ptr<const SplitTree> left, right;  // Split: I1, I2
};

struct SplitResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::shared_ptr<const SplitTree> tree;
    std::string cap_reason;
};

SplitResult is_vertex_splittable(const MonomialIdeal& I, const SearchCaps& caps = {});

std::string verify_split_tree(const MonomialIdeal& I, const SplitTree& tree);

}  // namespace cowl

#endif
