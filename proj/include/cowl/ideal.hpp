#ifndef COWL_IDEAL_HPP
#define COWL_IDEAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "cowl/monomial.hpp"

namespace cowl {

/// Monomial ideal in canonical form: the generating set is minimal under
/// divisibility and sorted by (degree, lex). Two equal ideals over the same
/// universe have identical representations. An empty generator list is the
/// zero ideal; a single generator 1 is the unit ideal.
struct MonomialIdeal {
    std::vector<std::string> vars;
    std::vector<Monomial> gens;

    bool operator==(const MonomialIdeal& o) const = default;
    bool is_zero() const { return gens.empty(); }
    bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }
    std::size_t nvars() const { return vars.size(); }
};

/// Retains exactly the divisibility-minimal generators, deduplicated and
/// canonically sorted.
MonomialIdeal minimalize(std::vector<std::string> vars, std::vector<Monomial> gens);

/// Convenience: parse "x*y^2"-style generator strings over `vars`.
MonomialIdeal make_ideal(std::vector<std::string> vars, const std::vector<std::string>& gen_strings);

Monomial parse_monomial(const std::vector<std::string>& vars, const std::string& text);
std::string monomial_to_string(const MonomialIdeal& context, const Monomial& m);
std::string monomial_to_string(const std::vector<std::string>& vars, const Monomial& m);

bool membership(const MonomialIdeal& I, const Monomial& m);

/// True iff every generator of J lies in I.
bool ideal_contains(const MonomialIdeal& I, const MonomialIdeal& J);

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& g);

/// Ideal generated by the degree-d part of I. Zero if d is below every
/// generator degree. Throws SizeCapError when the filler enumeration would
/// exceed `gen_cap` monomials.
MonomialIdeal component(const MonomialIdeal& I, std::uint64_t d, std::size_t gen_cap = 5'000'000);

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J);
MonomialIdeal power(const MonomialIdeal& I, std::uint64_t k);

struct PolarizationMap {
    // forward[v] lists, per occurrence index, the polarized variable index.
    std::vector<std::vector<int>> forward;
    MonomialIdeal origin;
};

/// Standard polarization: exponent e of variable x becomes the product of the
/// first e occurrence variables of x. Result is squarefree with the same
/// graded Betti numbers.
std::pair<MonomialIdeal, PolarizationMap> polarize(const MonomialIdeal& I);

/// Minimum and maximum generator degree; requires a nonzero ideal.
std::pair<std::uint64_t, std::uint64_t> degree_span(const MonomialIdeal& I);

}  // namespace cowl

#endif
