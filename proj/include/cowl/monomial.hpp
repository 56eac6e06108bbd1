#ifndef COWL_MONOMIAL_HPP
#define COWL_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "cowl/base.hpp"

namespace cowl {

// Exponent vector over a fixed, externally owned variable universe.
// exps.size() always equals the universe size; the zero vector is the
// monomial 1.
struct Monomial {
    std::vector<Exponent> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}

    bool operator==(const Monomial& o) const = default;

    bool is_one() const {
        for (Exponent e : exps)
            if (e != 0) return false;
        return true;
    }

    std::uint64_t degree() const {
        std::uint64_t d = 0;
        for (Exponent e : exps) d = checked_add_u64(d, e);
        return d;
    }
};

inline bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t v = 0; v < a.exps.size(); ++v)
        if (a.exps[v] > b.exps[v]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps.size());
    for (std::size_t v = 0; v < a.exps.size(); ++v)
        r.exps[v] = checked_add_exp(a.exps[v], b.exps[v]);
    return r;
}

inline Monomial mono_gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps.size());
    for (std::size_t v = 0; v < a.exps.size(); ++v)
        r.exps[v] = std::min(a.exps[v], b.exps[v]);
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps.size());
    for (std::size_t v = 0; v < a.exps.size(); ++v)
        r.exps[v] = std::max(a.exps[v], b.exps[v]);
    return r;
}

// a / b, requiring b | a.
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.exps.size());
    for (std::size_t v = 0; v < a.exps.size(); ++v) {
        if (b.exps[v] > a.exps[v]) throw ValidationError("monomial division with remainder");
        r.exps[v] = a.exps[v] - b.exps[v];
    }
    return r;
}

// u : g  =  u / gcd(u, g)
inline Monomial mono_colon(const Monomial& u, const Monomial& g) {
    return mono_div(u, mono_gcd(u, g));
}

// The single tie-breaking rule used everywhere: degree, then lexicographic
// on exponent vectors.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
    std::uint64_t da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exps < b.exps;
}

}  // namespace cowl

#endif
