#ifndef COWL_ORACLE_HPP
#define COWL_ORACLE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cowl/ideal.hpp"
#include "cowl/patterns.hpp"

namespace cowl {

struct OracleOptions {
    long long characteristic = 2;  // 0 or a prime
    ExecPolicy policy = ExecPolicy::Parallel;
    bool paranoid = false;              // extend componentwise checks 2 degrees past the top
    std::size_t face_cap = 200'000;     // per-complex face budget
    std::size_t lattice_cap = 5'000'000;
    std::size_t grid_cap = 4'000'000;   // cells before falling back to closure enumeration
};

/// Faces are the downward closure of the facet list.
struct SimplicialComplex {
    std::vector<std::string> ground;   // vertex names
    std::vector<std::vector<int>> facets;  // sorted vertex lists; empty list = the face {}
    bool void_complex = true;          // no faces at all (distinct from the {}-only complex)
};

/// Upper Koszul simplicial complex of I at multidegree a: the squarefree sets
/// W with x^(a - W) in I. The {}-only complex (x^a in I but no variable
/// quotient is) carries rank-1 reduced homology in dimension -1; that
/// convention is what makes beta_0 come out right.
SimplicialComplex upper_koszul(const MonomialIdeal& I, const Monomial& a,
                               std::size_t face_cap = 200'000);

/// ranks[i] = rank of reduced homology in dimension i-1, for i = 0..#ground.
std::vector<long long> reduced_homology_ranks(const SimplicialComplex& K, long long characteristic,
                                              std::size_t face_cap = 200'000);

struct BettiTable {
    // (homological index i, total degree j) -> rank
    std::map<std::pair<long long, std::uint64_t>, long long> entries;
    long long characteristic = 2;

    long long beta(long long i, std::uint64_t j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

/// Multigraded Betti numbers collapsed to total degree, accumulated over the
/// lcm lattice of I via upper-Koszul homology.
BettiTable betti_table(const MonomialIdeal& I, const OracleOptions& opts = {});

/// Same table computed through the polarization; agrees with betti_table by
/// the degree-preserving invariance of polarization. Kept as a cross-check.
BettiTable betti_table_via_polarization(const MonomialIdeal& I, const OracleOptions& opts = {});

/// max { j - i : beta_{i,j} != 0 }. Rejects the zero ideal.
long long regularity(const MonomialIdeal& I, const OracleOptions& opts = {});

/// Witness for a strand above the linear one: beta_{i, a} != 0 with
/// deg(a) - i > d.
struct LinearityViolation {
    Monomial multidegree;
    long long i = 0;
    std::uint64_t j = 0;
};

/// For an equigenerated ideal (all generators of degree d): true iff
/// regularity equals d. Rejects non-equigenerated or zero input.
bool has_linear_resolution(const MonomialIdeal& I, const OracleOptions& opts = {},
                           LinearityViolation* witness = nullptr);

struct DegreeCheck {
    std::uint64_t d = 0;
    bool linear = false;
    std::optional<LinearityViolation> violation;
};

struct BettiEvidence {
    std::vector<DegreeCheck> per_degree;
    std::optional<std::uint64_t> failing_degree;
    long long characteristic = 2;
    std::optional<long long> total_regularity;  // filled when requested
    bool componentwise_linear() const { return !failing_degree.has_value(); }
};

/// Checks reg(I_<d>) = d for d from the minimum to the maximum generator
/// degree (plus two more under --paranoid), stopping at the first failure.
BettiEvidence is_componentwise_linear_oracle(const MonomialIdeal& I, const OracleOptions& opts = {},
                                             bool with_total_regularity = false);

struct FormulaOracleReport {
    Pattern pattern;
    std::uint64_t k = 0, w2 = 0, w3 = 0;
    long long formula = 0;
    long long oracle = 0;
    bool match = false;
};

/// Builds the pattern's edge ideal, raises it to the k-th power and compares
/// oracle regularity with the closed form.
FormulaOracleReport formula_vs_oracle(Pattern p, std::uint64_t k, std::uint64_t w2, std::uint64_t w3,
                                      const OracleOptions& opts = {});

}  // namespace cowl

#endif
