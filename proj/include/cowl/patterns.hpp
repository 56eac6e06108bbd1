#ifndef COWL_PATTERNS_HPP
#define COWL_PATTERNS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cowl/graph.hpp"

namespace cowl {

enum class Pattern { D1, D2, D3, D4, House };

std::string pattern_name(Pattern p);
std::optional<Pattern> pattern_from_name(const std::string& s);

struct PatternMatch {
    Pattern pattern;
    std::vector<int> witness;  // host vertices, ordered as the catalog's x1, x2, ...
    bool operator==(const PatternMatch& o) const = default;
};

/// The frozen three-vertex catalog. Weight conditions apply to the witness
/// vertices in order (0 means unconstrained).
///
///   D1: x1->x2->x3 directed path, w(x2) >= 2, w(x3) >= 2
///   D2: x1->x2, x1->x3 out-star, w(x2) >= 2, w(x3) >= 2
///   D3: x1->x2->x3->x1 cyclic triangle, all three weights >= 2
///   D4: x1->x2, x1->x3, plus x3->x2 or x2->x3, w(x2) >= 2, w(x3) >= 2
///      (both third-arc orientations are stored under the single tag D4)
struct CatalogEntry {
    Pattern tag;
    std::vector<std::pair<int, int>> arcs;  // on local vertices 0,1,2
    std::uint64_t min_weight[3];
};

const std::vector<CatalogEntry>& forbidden_catalog();

/// Scans ordered 3-tuples of vertices against the catalog and returns the
/// first induced match, if any.
std::optional<PatternMatch> find_forbidden(const WeightedOrientedGraph& d);

/// Searches 5-vertex induced subgraphs for the house (a 4-cycle and a
/// triangle sharing one edge). Returns a witness ordered so that the edges
/// are exactly {0,1},{1,2},{2,3},{3,0},{0,4},{1,4}.
std::optional<PatternMatch> find_house(const SimpleGraph& g);
bool is_house_free(const SimpleGraph& g);

std::string verify_pattern_match(const WeightedOrientedGraph& d, const PatternMatch& pm);
std::string verify_house_match(const SimpleGraph& g, const PatternMatch& pm);

/// Regularity of the k-th power of a catalog pattern's edge ideal, as a
/// closed form in the two free weights (w := max(w2, w3)):
///   D4:      (k-1)(w+1) + w2 + w3
///   D1:      (1 + w2 + w3) - 1 + (k-1)(w+1)
///   D2, D3:  w2 + w3 + (k-1)(w+1)
/// Requires w2, w3 >= 2 and k >= 1.
long long pattern_power_regularity(Pattern p, std::uint64_t k, std::uint64_t w2, std::uint64_t w3);

/// Standalone weighted oriented instance of a catalog pattern with the two
/// free weights on x2, x3. D3's first vertex carries the fixed weight 2 its
/// closed form assumes; sources elsewhere have weight 1.
WeightedOrientedGraph pattern_instance(Pattern p, std::uint64_t w2, std::uint64_t w3);

struct FormulaEvidence {
    Pattern pattern;
    std::uint64_t k = 0, w2 = 0, w3 = 0;
    long long predicted_regularity = 0;
    bool operator==(const FormulaEvidence& o) const = default;
};

std::string verify_formula_evidence(const FormulaEvidence& fe);

}  // namespace cowl

#endif
