#include "cowl/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cowl {

namespace {

using boost::multiprecision::cpp_int;

// ---------------------------------------------------------------- ranks

long long rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
    if (m.empty() || m[0].empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), rank = 0;
    for (auto& row : m)
        for (auto& x : row) x = ((x % p) + p) % p;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        // normalize pivot row
        long long inv = 1, base = m[rank][c] % p, e = p - 2;
        while (e) {  // Fermat inverse
            if (e & 1) inv = (__int128)inv * base % p;
            base = (__int128)base * base % p;
            e >>= 1;
        }
        for (std::size_t cc = c; cc < cols; ++cc) m[rank][cc] = (__int128)m[rank][cc] * inv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            long long f = m[r][c];
            for (std::size_t cc = c; cc < cols; ++cc)
                m[r][cc] = ((m[r][cc] - (__int128)f * m[rank][cc]) % p + p) % p;
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

// Exact rank over Q by fraction-free elimination.
long long rank_char0(std::vector<std::vector<long long>> m0) {
    if (m0.empty() || m0[0].empty()) return 0;
    std::size_t rows = m0.size(), cols = m0[0].size(), rank = 0;
    std::vector<std::vector<cpp_int>> m(rows, std::vector<cpp_int>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = m0[r][c];
    cpp_int prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t cc = c + 1; cc < cols; ++cc)
                m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc]) / prev;
            m[r][c] = 0;
        }
        prev = m[rank][c];
        ++rank;
    }
    return static_cast<long long>(rank);
}

long long matrix_rank(std::vector<std::vector<long long>> m, long long characteristic) {
    if (characteristic == 0) return rank_char0(std::move(m));
    return rank_mod_p(std::move(m), characteristic);
}

// ------------------------------------------------- homology from face lists

// faces_by_card[c] holds the cardinality-c faces as sorted vertex lists;
// faces_by_card[0] is {{}} iff the empty face is present.
std::vector<long long> homology_from_faces(const std::vector<std::vector<std::vector<int>>>& faces_by_card,
                                           long long characteristic, int nverts) {
    std::size_t top = faces_by_card.size();
    // boundary_rank[c] = rank of the map from cardinality-c faces to (c-1)-faces
    std::vector<long long> boundary_rank(top + 1, 0);
    for (std::size_t c = 1; c < top; ++c) {
        const auto& src = faces_by_card[c];
        const auto& dst = faces_by_card[c - 1];
        if (src.empty() || dst.empty()) continue;
        std::map<std::vector<int>, std::size_t> dst_index;
        for (std::size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = i;
        std::vector<std::vector<long long>> m(dst.size(), std::vector<long long>(src.size(), 0));
        for (std::size_t j = 0; j < src.size(); ++j) {
            const auto& f = src[j];
            long long sign = 1;
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> sub;
                sub.reserve(f.size() - 1);
                for (std::size_t t = 0; t < f.size(); ++t)
                    if (t != drop) sub.push_back(f[t]);
                m[dst_index.at(sub)][j] = sign;
                sign = -sign;
            }
        }
        boundary_rank[c] = matrix_rank(std::move(m), characteristic);
    }
    std::vector<long long> h(static_cast<std::size_t>(nverts) + 1, 0);
    for (std::size_t i = 0; i < h.size(); ++i) {
        long long fi = i < top ? static_cast<long long>(faces_by_card[i].size()) : 0;
        long long down = i < boundary_rank.size() ? boundary_rank[i] : 0;
        long long up = i + 1 < boundary_rank.size() ? boundary_rank[i + 1] : 0;
        h[i] = fi - down - up;
    }
    return h;
}

// ------------------------------------------- small-complex (<=6 vars) kernel

// A complex on <= 6 labeled vertices is a 64-bit mask over subsets. Homology
// ranks repeat heavily across multidegrees, so they are memoized per thread.
std::array<std::int8_t, 8> homology_mask(std::uint64_t faces, int nv, long long characteristic) {
    std::vector<std::vector<std::vector<int>>> by_card(static_cast<std::size_t>(nv) + 1);
    for (int s = 0; s < (1 << nv); ++s) {
        if (!((faces >> s) & 1)) continue;
        std::vector<int> f;
        for (int v = 0; v < nv; ++v)
            if ((s >> v) & 1) f.push_back(v);
        by_card[f.size()].push_back(std::move(f));
    }
    auto h = homology_from_faces(by_card, characteristic, nv);
    std::array<std::int8_t, 8> out{};
    for (std::size_t i = 0; i < out.size() && i < h.size(); ++i)
        out[i] = static_cast<std::int8_t>(h[i]);
    return out;
}

const std::array<std::int8_t, 8>& homology_mask_memo(std::uint64_t faces, int nv,
                                                     long long characteristic) {
    thread_local std::map<long long, std::unordered_map<std::uint64_t, std::array<std::int8_t, 8>>>
        cache;
    auto& chart = cache[characteristic];
    auto it = chart.find(faces);
    if (it != chart.end()) return it->second;
    auto [ins, ok] = chart.emplace(faces, homology_mask(faces, nv, characteristic));
    return ins->second;
}

// ----------------------------------------------------------- lcm lattice

struct ActiveProjection {
    std::vector<int> active;            // original var index per active slot
    std::vector<Monomial> gens;         // projected generators
    std::size_t nv() const { return active.size(); }
};

ActiveProjection project_active(const MonomialIdeal& I) {
    ActiveProjection p;
    std::vector<bool> used(I.nvars(), false);
    for (const Monomial& g : I.gens)
        for (std::size_t v = 0; v < I.nvars(); ++v)
            if (g.exps[v]) used[v] = true;
    for (std::size_t v = 0; v < I.nvars(); ++v)
        if (used[v]) p.active.push_back(static_cast<int>(v));
    for (const Monomial& g : I.gens) {
        Monomial m(p.active.size());
        for (std::size_t s = 0; s < p.active.size(); ++s) m.exps[s] = g.exps[p.active[s]];
        p.gens.push_back(std::move(m));
    }
    return p;
}

// Lattice of lcms of nonempty generator subsets, plus an ideal-membership
// oracle. Two backends: a mixed-radix grid with a DP over divisibility (fast,
// bounded memory) and a join-closure fallback.
class IdealLattice {
  public:
    IdealLattice(ActiveProjection proj, const OracleOptions& opts) : proj_(std::move(proj)) {
        nv_ = proj_.nv();
        build(opts);
        std::sort(points_.begin(), points_.end(), canonical_less);
    }

    const std::vector<Monomial>& points() const { return points_; }
    std::size_t nv() const { return nv_; }

    bool in_ideal(const Monomial& m) const {
        if (grid_) {
            std::size_t idx = 0;
            for (std::size_t v = 0; v < nv_; ++v) {
                if (m.exps[v] >= dims_[v]) return scan_gens(m);
                idx += m.exps[v] * strides_[v];
            }
            return in_[idx] != 0;
        }
        return scan_gens(m);
    }

  private:
    bool scan_gens(const Monomial& m) const {
        for (const Monomial& g : proj_.gens)
            if (divides(g, m)) return true;
        return false;
    }

    void build(const OracleOptions& opts) {
        std::vector<Exponent> maxe(nv_, 0);
        for (const Monomial& g : proj_.gens)
            for (std::size_t v = 0; v < nv_; ++v) maxe[v] = std::max(maxe[v], g.exps[v]);
        std::size_t cells = 1;
        bool feasible = nv_ > 0 && nv_ <= 12;
        for (std::size_t v = 0; v < nv_ && feasible; ++v) {
            std::size_t d = static_cast<std::size_t>(maxe[v]) + 1;
            if (cells > opts.grid_cap / d) feasible = false;
            else cells *= d;
        }
        if (feasible) build_grid(maxe, cells, opts);
        else build_closure(opts);
    }

    void build_grid(const std::vector<Exponent>& maxe, std::size_t cells, const OracleOptions& opts) {
        grid_ = true;
        dims_.resize(nv_);
        strides_.resize(nv_);
        std::size_t stride = 1;
        for (std::size_t v = nv_; v-- > 0;) {
            dims_[v] = static_cast<std::size_t>(maxe[v]) + 1;
            strides_[v] = stride;
            stride *= dims_[v];
        }
        in_.assign(cells, 0);
        std::vector<std::uint8_t> isgen(cells, 0);
        // join of all generators dividing the cell, one byte per variable
        std::vector<std::uint64_t> join(cells, 0);
        for (const Monomial& g : proj_.gens) {
            std::size_t idx = 0;
            for (std::size_t v = 0; v < nv_; ++v) idx += g.exps[v] * strides_[v];
            isgen[idx] = 1;
        }
        std::vector<Exponent> e(nv_, 0);
        for (std::size_t idx = 0; idx < cells; ++idx) {
            std::uint8_t in = 0;
            std::uint64_t jp = 0;
            for (std::size_t v = 0; v < nv_; ++v) {
                if (e[v] == 0) continue;
                std::size_t pidx = idx - strides_[v];
                in |= in_[pidx];
                std::uint64_t pj = join[pidx];
                for (std::size_t b = 0; b < nv_; ++b) {
                    std::uint64_t mine = (jp >> (8 * b)) & 0xff, theirs = (pj >> (8 * b)) & 0xff;
                    if (theirs > mine) jp = (jp & ~(std::uint64_t{0xff} << (8 * b))) | (theirs << (8 * b));
                }
            }
            if (isgen[idx]) {
                in = 1;
                for (std::size_t b = 0; b < nv_; ++b) {
                    std::uint64_t mine = (jp >> (8 * b)) & 0xff, val = e[b];
                    if (val > mine) jp = (jp & ~(std::uint64_t{0xff} << (8 * b))) | (val << (8 * b));
                }
            }
            in_[idx] = in;
            join[idx] = jp;
            if (in) {
                std::uint64_t packed = 0;
                for (std::size_t b = 0; b < nv_; ++b) packed |= std::uint64_t{e[b]} << (8 * b);
                if (packed == jp) {
                    Monomial m(nv_);
                    m.exps = e;
                    points_.push_back(std::move(m));
                }
            }
            // odometer increment, last variable fastest
            for (std::size_t v = nv_; v-- > 0;) {
                if (++e[v] < dims_[v]) break;
                e[v] = 0;
            }
        }
    }

    void build_closure(const OracleOptions& opts) {
        grid_ = false;
        struct VecHash {
            std::size_t operator()(const std::vector<Exponent>& v) const {
                std::size_t h = 1469598103934665603ull;
                for (Exponent x : v) {
                    h ^= x;
                    h *= 1099511628211ull;
                }
                return h;
            }
        };
        std::unordered_set<std::vector<Exponent>, VecHash> seen;
        std::vector<Monomial> work;
        for (const Monomial& g : proj_.gens)
            if (seen.insert(g.exps).second) work.push_back(g);
        for (std::size_t head = 0; head < work.size(); ++head) {
            Monomial cur = work[head];
            for (const Monomial& g : proj_.gens) {
                Monomial j = mono_lcm(cur, g);
                if (seen.insert(j.exps).second) {
                    work.push_back(j);
                    if (work.size() > opts.lattice_cap)
                        throw SizeCapError("lcm lattice exceeds the configured cap");
                }
            }
        }
        points_ = std::move(work);
    }

    ActiveProjection proj_;
    std::size_t nv_ = 0;
    bool grid_ = false;
    std::vector<std::size_t> dims_, strides_;
    std::vector<std::uint8_t> in_;
    std::vector<Monomial> points_;
};

// Build the upper-Koszul complex at a lattice point as a subset mask
// (nv <= 6 only).
std::uint64_t koszul_mask(const IdealLattice& L, const Monomial& a) {
    int nv = static_cast<int>(L.nv());
    std::uint64_t supp = 0;
    for (int v = 0; v < nv; ++v)
        if (a.exps[v]) supp |= std::uint64_t{1} << v;
    std::uint64_t faces = 0;
    Monomial q = a;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << nv); ++w) {
        if (w & ~supp) continue;
        for (int v = 0; v < nv; ++v) q.exps[v] = a.exps[v] - (((w >> v) & 1) ? 1 : 0);
        if (L.in_ideal(q)) faces |= std::uint64_t{1} << w;
    }
    return faces;
}

// Generic path: faces by cardinality, grown from parents (the complex is
// downward closed).
std::vector<std::vector<std::vector<int>>> koszul_faces(const IdealLattice& L, const Monomial& a,
                                                        std::size_t face_cap) {
    std::size_t nv = L.nv();
    std::vector<std::vector<std::vector<int>>> by_card(nv + 2);
    if (!L.in_ideal(a)) return by_card;  // void complex
    by_card[0].push_back({});
    std::size_t total = 1;
    Monomial q = a;
    for (std::size_t card = 0; card + 1 <= nv; ++card) {
        if (by_card[card].empty()) break;
        for (const auto& f : by_card[card]) {
            int start = f.empty() ? 0 : f.back() + 1;
            for (int v = start; v < static_cast<int>(nv); ++v) {
                if (a.exps[v] == 0) continue;
                q = a;
                for (int u : f) q.exps[u] -= 1;
                q.exps[v] -= 1;
                if (L.in_ideal(q)) {
                    auto nf = f;
                    nf.push_back(v);
                    by_card[card + 1].push_back(std::move(nf));
                    if (++total > face_cap)
                        throw SizeCapError("upper-Koszul complex exceeds the face cap");
                }
            }
        }
    }
    return by_card;
}

std::vector<long long> point_homology(const IdealLattice& L, const Monomial& a,
                                      const OracleOptions& opts) {
    if (L.nv() <= 6) {
        auto& h = homology_mask_memo(koszul_mask(L, a), static_cast<int>(L.nv()), opts.characteristic);
        return std::vector<long long>(h.begin(), h.begin() + L.nv() + 1);
    }
    auto by_card = koszul_faces(L, a, opts.face_cap);
    return homology_from_faces(by_card, opts.characteristic, static_cast<int>(L.nv()));
}

Monomial unproject(const ActiveProjection& p, const Monomial& a, std::size_t full_nvars) {
    Monomial m(full_nvars);
    for (std::size_t s = 0; s < p.active.size(); ++s) m.exps[p.active[s]] = a.exps[s];
    return m;
}

}  // namespace

// ----------------------------------------------------------- public ops

SimplicialComplex upper_koszul(const MonomialIdeal& I, const Monomial& a, std::size_t face_cap) {
    if (a.exps.size() != I.nvars()) throw ValidationError("multidegree has wrong universe size");
    SimplicialComplex K;
    K.ground = I.vars;
    if (!membership(I, a)) return K;  // void
    K.void_complex = false;
    // enumerate faces by cardinality
    std::vector<std::vector<std::vector<int>>> by_card(I.nvars() + 2);
    by_card[0].push_back({});
    std::size_t total = 1;
    for (std::size_t card = 0; card + 1 <= I.nvars(); ++card) {
        if (by_card[card].empty()) break;
        for (const auto& f : by_card[card]) {
            int start = f.empty() ? 0 : f.back() + 1;
            for (int v = start; v < static_cast<int>(I.nvars()); ++v) {
                if (a.exps[v] == 0) continue;
                Monomial q = a;
                for (int u : f) q.exps[u] -= 1;
                if (q.exps[v] == 0) continue;
                q.exps[v] -= 1;
                if (membership(I, q)) {
                    auto nf = f;
                    nf.push_back(v);
                    by_card[card + 1].push_back(std::move(nf));
                    if (++total > face_cap)
                        throw SizeCapError("upper-Koszul complex exceeds the face cap");
                }
            }
        }
    }
    // facets: faces with no strict superset face
    std::set<std::vector<int>> all;
    for (const auto& level : by_card)
        for (const auto& f : level) all.insert(f);
    for (const auto& f : all) {
        bool maximal = true;
        for (int v = 0; v < static_cast<int>(I.nvars()) && maximal; ++v) {
            if (std::binary_search(f.begin(), f.end(), v)) continue;
            std::vector<int> up = f;
            up.insert(std::lower_bound(up.begin(), up.end(), v), v);
            if (all.count(up)) maximal = false;
        }
        if (maximal) K.facets.push_back(f);
    }
    return K;
}

std::vector<long long> reduced_homology_ranks(const SimplicialComplex& K, long long characteristic,
                                              std::size_t face_cap) {
    int nverts = static_cast<int>(K.ground.size());
    std::vector<long long> zero(static_cast<std::size_t>(nverts) + 1, 0);
    if (K.void_complex) return zero;
    std::set<std::vector<int>> all;
    std::vector<std::vector<int>> stack(K.facets.begin(), K.facets.end());
    if (stack.empty()) stack.push_back({});
    while (!stack.empty()) {
        std::vector<int> f = std::move(stack.back());
        stack.pop_back();
        if (!all.insert(f).second) continue;
        if (all.size() > face_cap) throw SizeCapError("complex exceeds the face cap");
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            std::vector<int> sub;
            for (std::size_t t = 0; t < f.size(); ++t)
                if (t != drop) sub.push_back(f[t]);
            stack.push_back(std::move(sub));
        }
    }
    std::vector<std::vector<std::vector<int>>> by_card(static_cast<std::size_t>(nverts) + 2);
    for (const auto& f : all) {
        if (static_cast<int>(f.size()) > nverts) throw ValidationError("facet larger than ground set");
        by_card[f.size()].push_back(f);
    }
    return homology_from_faces(by_card, characteristic, nverts);
}

namespace {

// Shared driver: applies fn(point, homology ranks) over the lattice.
// Returns false if fn requested a stop (serial mode only).
template <class Fn>
void scan_lattice(const IdealLattice& L, const OracleOptions& opts, Fn&& fn) {
    const auto& pts = L.points();
#ifdef _OPENMP
    if (opts.policy == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::size_t i = 0; i < pts.size(); ++i) fn(i, pts[i], point_homology(L, pts[i], opts));
        return;
    }
#endif
    for (std::size_t i = 0; i < pts.size(); ++i) fn(i, pts[i], point_homology(L, pts[i], opts));
}

}  // namespace

BettiTable betti_table(const MonomialIdeal& I, const OracleOptions& opts) {
    BettiTable table;
    table.characteristic = opts.characteristic;
    if (I.is_zero()) return table;
    if (I.is_unit()) {
        table.entries[{0, 0}] = 1;
        return table;
    }
    ActiveProjection proj = project_active(I);
    IdealLattice L(std::move(proj), opts);

#ifdef _OPENMP
    int nthreads = opts.policy == ExecPolicy::Parallel ? omp_get_max_threads() : 1;
#else
    int nthreads = 1;
#endif
    std::vector<std::map<std::pair<long long, std::uint64_t>, long long>> partial(
        static_cast<std::size_t>(nthreads));
    scan_lattice(L, opts, [&](std::size_t, const Monomial& a, const std::vector<long long>& h) {
        int t = 0;
#ifdef _OPENMP
        t = omp_get_thread_num();
#endif
        std::uint64_t j = a.degree();
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h[i] > 0) partial[static_cast<std::size_t>(t)][{static_cast<long long>(i), j}] += h[i];
    });
    for (const auto& p : partial)
        for (const auto& [key, val] : p) table.entries[key] += val;
    return table;
}

BettiTable betti_table_via_polarization(const MonomialIdeal& I, const OracleOptions& opts) {
    return betti_table(polarize(I).first, opts);
}

long long regularity(const MonomialIdeal& I, const OracleOptions& opts) {
    if (I.is_zero()) throw ValidationError("regularity of the zero ideal");
    BettiTable t = betti_table(I, opts);
    long long reg = 0;
    for (const auto& [key, val] : t.entries) {
        if (val == 0) continue;
        reg = std::max(reg, static_cast<long long>(key.second) - key.first);
    }
    return reg;
}

bool has_linear_resolution(const MonomialIdeal& I, const OracleOptions& opts,
                           LinearityViolation* witness) {
    if (I.is_zero()) throw ValidationError("linear resolution query on the zero ideal");
    auto [dmin, dmax] = degree_span(I);
    if (dmin != dmax) throw ValidationError("linear resolution query requires an equigenerated ideal");
    std::uint64_t d = dmin;
    ActiveProjection proj = project_active(I);
    std::vector<int> active = proj.active;
    IdealLattice L(std::move(proj), opts);

    std::atomic<bool> found{false};
    scan_lattice(L, opts, [&](std::size_t, const Monomial& a, const std::vector<long long>& h) {
        if (found.load(std::memory_order_relaxed)) return;
        std::uint64_t j = a.degree();
        if (j <= d) return;
        for (std::size_t i = 0; i < h.size(); ++i)
            if (h[i] > 0 && j - i > d) {
                found.store(true, std::memory_order_relaxed);
                return;
            }
    });
    if (!found.load()) return true;
    if (witness) {
        // canonical witness: first violating point in (degree, lex) order
        for (const Monomial& a : L.points()) {
            std::uint64_t j = a.degree();
            if (j <= d) continue;
            auto h = point_homology(L, a, opts);
            for (std::size_t i = 0; i < h.size(); ++i)
                if (h[i] > 0 && j - i > d) {
                    ActiveProjection ap;
                    ap.active = active;
                    witness->multidegree = unproject(ap, a, I.nvars());
                    witness->i = static_cast<long long>(i);
                    witness->j = j;
                    return false;
                }
        }
    }
    return false;
}

BettiEvidence is_componentwise_linear_oracle(const MonomialIdeal& I, const OracleOptions& opts,
                                             bool with_total_regularity) {
    if (I.is_zero()) throw ValidationError("componentwise check on the zero ideal");
    BettiEvidence ev;
    ev.characteristic = opts.characteristic;
    auto [dmin, dmax] = degree_span(I);
    std::uint64_t dtop = dmax + (opts.paranoid ? 2 : 0);
    for (std::uint64_t d = dmin; d <= dtop; ++d) {
        MonomialIdeal C = component(I, d);
        if (C.is_zero()) continue;
        DegreeCheck chk;
        chk.d = d;
        LinearityViolation w;
        chk.linear = has_linear_resolution(C, opts, &w);
        if (!chk.linear) chk.violation = w;
        ev.per_degree.push_back(chk);
        if (!chk.linear) {
            ev.failing_degree = d;
            break;
        }
    }
    if (with_total_regularity) ev.total_regularity = regularity(I, opts);
    return ev;
}

FormulaOracleReport formula_vs_oracle(Pattern p, std::uint64_t k, std::uint64_t w2, std::uint64_t w3,
                                      const OracleOptions& opts) {
    FormulaOracleReport rep;
    rep.pattern = p;
    rep.k = k;
    rep.w2 = w2;
    rep.w3 = w3;
    rep.formula = pattern_power_regularity(p, k, w2, w3);
    MonomialIdeal I = edge_ideal(pattern_instance(p, w2, w3));
    rep.oracle = regularity(power(I, k), opts);
    rep.match = rep.formula == rep.oracle;
    return rep;
}

}  // namespace cowl
