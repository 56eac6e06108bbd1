#ifndef COWL_DECIDE_HPP
#define COWL_DECIDE_HPP

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "cowl/chordal.hpp"
#include "cowl/graph.hpp"
#include "cowl/lq.hpp"
#include "cowl/multipartite.hpp"
#include "cowl/oracle.hpp"
#include "cowl/patterns.hpp"

namespace cowl {

enum class Answer { Yes, No, Unknown };
std::string answer_name(Answer a);

/// Chordality certificate about the complement of a named graph derived
/// from the input.
struct CochordalityEvidence {
    enum class Target { Underlying, HGraph };
    Target target = Target::Underlying;
    ChordalityCertificate cert;
};

using Certificate = std::variant<std::monostate, PatternMatch, CochordalityEvidence,
                                 MultipartiteCertificate, LinearQuotientOrder,
                                 std::shared_ptr<const SplitTree>, BettiEvidence, FormulaEvidence>;

/// Decision with a machine-checkable certificate and the rule that produced
/// it. Rules are stable identifiers naming the decisive criterion:
///   forbidden_pattern, g_complement_not_chordal, h_complement_not_chordal,
///   house_free_characterization, chordal_characterization,
///   multipartite_characterization, linear_quotients, betti_oracle,
///   pattern_obstructs_all_powers, multipartite_power_reduction,
///   house_free_power_reduction, search_capped, zero_ideal
struct Verdict {
    Answer answer = Answer::Unknown;
    std::string rule;
    Certificate certificate;
    std::string notes;
    std::shared_ptr<const Verdict> base;  // set by power reductions: the k=1 verdict
};

struct DecideOptions {
    SearchCaps caps;
    OracleOptions oracle;
    bool use_oracle = true;
};

/// Criterion: both the underlying graph and the degree-two generator graph
/// are co-chordal, and no catalog pattern is an induced subgraph.
struct Criterion4Report {
    ChordalityCertificate g_cochordal;  // about complement(underlying)
    ChordalityCertificate h_cochordal;  // about complement(h_graph)
    std::optional<PatternMatch> forbidden;
    bool holds = false;
};

Criterion4Report criterion4(const WeightedOrientedGraph& d);

/// Decision cascade for componentwise linearity of I(D): forbidden patterns,
/// the two co-chordality obstructions, the characterized graph classes with a
/// constructive split certificate, then a linear-quotient search and (when
/// allowed) the Betti oracle.
Verdict decide_componentwise_linear(const WeightedOrientedGraph& d, const DecideOptions& opts = {});

/// Decision cascade for componentwise linearity of I(D)^k; k = 1 delegates to
/// decide_componentwise_linear.
Verdict decide_power(const WeightedOrientedGraph& d, std::uint64_t k, const DecideOptions& opts = {});

/// Linear quotients must transfer from I(D) to I(D)^2 on complete
/// multipartite graphs; the report flags any counterexample.
struct TransferReport {
    LqResult base;
    LqResult squared;
    bool vacuous = false;    // base search did not find an order
    bool violation = false;  // base found, square definitely has none
};

TransferReport square_lq_transfer_check(const WeightedOrientedGraph& d, const DecideOptions& opts = {});

}  // namespace cowl

#endif
