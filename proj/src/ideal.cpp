#include "cowl/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cowl {

MonomialIdeal minimalize(std::vector<std::string> vars, std::vector<Monomial> gens) {
    for (const Monomial& g : gens)
        if (g.exps.size() != vars.size())
            throw ValidationError("generator has wrong universe size");
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const Monomial& g : gens) {
        bool dominated = false;
        for (const Monomial& k : kept) {
            // kept is degree-sorted, so only earlier elements can divide g
            if (divides(k, g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(g);
    }
    return MonomialIdeal{std::move(vars), std::move(kept)};
}

Monomial parse_monomial(const std::vector<std::string>& vars, const std::string& text) {
    Monomial m(vars.size());
    if (text == "1") return m;
    std::stringstream ss(text);
    std::string factor;
    bool any = false;
    while (std::getline(ss, factor, '*')) {
        if (factor.empty()) throw ParseError("empty factor in monomial '" + text + "'");
        any = true;
        std::string name = factor;
        Exponent e = 1;
        auto caret = factor.find('^');
        if (caret != std::string::npos) {
            name = factor.substr(0, caret);
            std::string expstr = factor.substr(caret + 1);
            if (expstr.empty() || expstr.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad exponent '" + expstr + "' in monomial '" + text + "'");
            unsigned long long val = std::stoull(expstr);
            if (val == 0) throw ParseError("zero exponent in monomial '" + text + "'");
            if (val > std::numeric_limits<Exponent>::max())
                throw ParseError("exponent out of range in monomial '" + text + "'");
            e = static_cast<Exponent>(val);
        }
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end())
            throw ParseError("variable '" + name + "' not in the declared universe");
        std::size_t v = static_cast<std::size_t>(it - vars.begin());
        m.exps[v] = checked_add_exp(m.exps[v], e);
    }
    if (!any) throw ParseError("empty monomial string");
    return m;
}

std::string monomial_to_string(const std::vector<std::string>& vars, const Monomial& m) {
    std::string out;
    for (std::size_t v = 0; v < vars.size(); ++v) {
        if (m.exps[v] == 0) continue;
        if (!out.empty()) out += "*";
        out += vars[v];
        if (m.exps[v] > 1) out += "^" + std::to_string(m.exps[v]);
    }
    return out.empty() ? "1" : out;
}

std::string monomial_to_string(const MonomialIdeal& context, const Monomial& m) {
    return monomial_to_string(context.vars, m);
}

MonomialIdeal make_ideal(std::vector<std::string> vars, const std::vector<std::string>& gen_strings) {
    std::vector<Monomial> gens;
    gens.reserve(gen_strings.size());
    for (const std::string& s : gen_strings) gens.push_back(parse_monomial(vars, s));
    return minimalize(std::move(vars), std::move(gens));
}

bool membership(const MonomialIdeal& I, const Monomial& m) {
    for (const Monomial& g : I.gens)
        if (divides(g, m)) return true;
    return false;
}

bool ideal_contains(const MonomialIdeal& I, const MonomialIdeal& J) {
    for (const Monomial& g : J.gens)
        if (!membership(I, g)) return false;
    return true;
}

MonomialIdeal colon(const MonomialIdeal& I, const Monomial& g) {
    std::vector<Monomial> quots;
    quots.reserve(I.gens.size());
    for (const Monomial& u : I.gens) quots.push_back(mono_colon(u, g));
    return minimalize(I.vars, std::move(quots));
}

namespace {

// All monomials of total degree d over nvars variables, appended to out.
void enumerate_degree(std::size_t nvars, std::uint64_t d, Monomial& scratch, std::size_t v,
                      std::vector<Monomial>& out, std::size_t cap) {
    if (v + 1 == nvars) {
        if (d > std::numeric_limits<Exponent>::max()) throw OverflowError("filler exponent overflow");
        scratch.exps[v] = static_cast<Exponent>(d);
        out.push_back(scratch);
        if (out.size() > cap) throw SizeCapError("component enumeration exceeds cap");
        scratch.exps[v] = 0;
        return;
    }
    for (std::uint64_t e = 0; e <= d; ++e) {
        scratch.exps[v] = static_cast<Exponent>(e);
        enumerate_degree(nvars, d - e, scratch, v + 1, out, cap);
    }
    scratch.exps[v] = 0;
}

}  // namespace

MonomialIdeal component(const MonomialIdeal& I, std::uint64_t d, std::size_t gen_cap) {
    std::vector<Monomial> gens;
    if (I.nvars() == 0) {
        if (I.is_unit() && d == 0) return I;
        return MonomialIdeal{I.vars, {}};
    }
    std::set<std::vector<Exponent>> seen;
    for (const Monomial& u : I.gens) {
        std::uint64_t du = u.degree();
        if (du > d) continue;
        std::vector<Monomial> fillers;
        Monomial scratch(I.nvars());
        enumerate_degree(I.nvars(), d - du, scratch, 0, fillers, gen_cap);
        for (const Monomial& f : fillers) {
            Monomial m = mono_mul(u, f);
            if (seen.insert(m.exps).second) {
                gens.push_back(std::move(m));
                if (gens.size() > gen_cap) throw SizeCapError("component has too many generators");
            }
        }
    }
    return minimalize(I.vars, std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.vars != J.vars)
        throw ValidationError("product of ideals over different variable universes");
    std::vector<Monomial> gens;
    gens.reserve(I.gens.size() * J.gens.size());
    for (const Monomial& a : I.gens)
        for (const Monomial& b : J.gens) gens.push_back(mono_mul(a, b));
    return minimalize(I.vars, std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, std::uint64_t k) {
    if (k < 1) throw ValidationError("power requires k >= 1");
    MonomialIdeal acc = I;
    for (std::uint64_t i = 1; i < k; ++i) acc = product(acc, I);
    return acc;
}

std::pair<MonomialIdeal, PolarizationMap> polarize(const MonomialIdeal& I) {
    std::vector<Exponent> maxexp(I.nvars(), 0);
    for (const Monomial& g : I.gens)
        for (std::size_t v = 0; v < I.nvars(); ++v) maxexp[v] = std::max(maxexp[v], g.exps[v]);

    PolarizationMap pm;
    pm.forward.assign(I.nvars(), {});
    pm.origin = I;
    std::vector<std::string> pvars;
    for (std::size_t v = 0; v < I.nvars(); ++v) {
        for (Exponent j = 1; j <= maxexp[v]; ++j) {
            pm.forward[v].push_back(static_cast<int>(pvars.size()));
            pvars.push_back(I.vars[v] + "[" + std::to_string(j) + "]");
        }
    }
    std::vector<Monomial> pgens;
    pgens.reserve(I.gens.size());
    for (const Monomial& g : I.gens) {
        Monomial p(pvars.size());
        for (std::size_t v = 0; v < I.nvars(); ++v)
            for (Exponent j = 0; j < g.exps[v]; ++j) p.exps[static_cast<std::size_t>(pm.forward[v][j])] = 1;
        pgens.push_back(std::move(p));
    }
    return {minimalize(std::move(pvars), std::move(pgens)), std::move(pm)};
}

std::pair<std::uint64_t, std::uint64_t> degree_span(const MonomialIdeal& I) {
    if (I.is_zero()) throw ValidationError("degree span of the zero ideal");
    // canonical sort is degree-first
    return {I.gens.front().degree(), I.gens.back().degree()};
}

}  // namespace cowl
