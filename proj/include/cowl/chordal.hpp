#ifndef COWL_CHORDAL_HPP
#define COWL_CHORDAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "cowl/graph.hpp"

namespace cowl {

/// Either a perfect elimination ordering of all vertices (chordal) or a
/// chordless induced cycle of length >= 4 (not chordal). Both re-verify in
/// polynomial time.
struct ChordalityCertificate {
    bool chordal = false;
    std::vector<int> peo;    // filled iff chordal
    std::vector<int> cycle;  // filled iff !chordal, length >= 4
    bool operator==(const ChordalityCertificate& o) const = default;
};

/// Maximum-cardinality search produces a candidate PEO which is then
/// verified; on failure a chordless cycle is extracted.
ChordalityCertificate is_chordal(const SimpleGraph& g);

/// is_chordal(complement(g)).
ChordalityCertificate is_cochordal(const SimpleGraph& g);

/// Re-check a PEO claim: every vertex's later neighbors form a clique and the
/// order is a permutation of V. Returns an empty string on success, else the
/// violated condition.
std::string verify_peo(const SimpleGraph& g, const std::vector<int>& peo);

/// Re-check a chordless-cycle claim: length >= 4, consecutive pairs are
/// edges, non-consecutive pairs are non-edges, vertices distinct.
std::string verify_chordless_cycle(const SimpleGraph& g, const std::vector<int>& cycle);

std::string verify_chordality(const SimpleGraph& g, const ChordalityCertificate& cert);

}  // namespace cowl

#endif
