#include "oa/search.hpp"

#include "oa/delsarte.hpp"
#include "oa/design.hpp"
#include "oa/extremal.hpp"
#include "oa/groebner.hpp"
#include "oa/krawtchouk.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

namespace oa {

std::vector<Int> candidate_sizes(int n, int q, int s) {
    if (s < 1 || n <= s || q < 2)
        throw std::invalid_argument("candidate_sizes: need n > s >= 1 and q >= 2");
    Int lo = rao_bound(n, q, 2 * s - 1);
    Int hi = absolute_bound(n, q, s);
    Int step = int_pow(q, 2 * s - 1);
    Int first;
    mpz_cdiv_q(first.get_mpz_t(), lo.get_mpz_t(), step.get_mpz_t());
    first *= step;
    std::vector<Int> out;
    for (Int v = first; v <= hi; v += step) out.push_back(v);
    return out;
}

namespace {

// Determinant of a small polynomial matrix by first-column expansion.
MultiPoly mp_det(const std::vector<std::vector<MultiPoly>>& m, int nv) {
    size_t k = m.size();
    if (k == 1) return m[0][0];
    MultiPoly acc(nv);
    for (size_t r = 0; r < k; ++r) {
        if (m[r][0].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(k - 1);
        for (size_t i = 0; i < k; ++i) {
            if (i == r) continue;
            std::vector<MultiPoly> row(m[i].begin() + 1, m[i].end());
            minor.push_back(std::move(row));
        }
        MultiPoly term = m[r][0] * mp_det(minor, nv);
        acc = (r % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Design equations with the size N kept as the last polynomial variable,
// shared by all candidate sizes of one (q, n) cell.
struct DesignSystem {
    int n = 0, q = 0, s = 0;
    std::vector<MultiPoly> polys;  // slot i-1 holds p_i, frame of s+1 variables
};

DesignSystem build_design_system(int n, int q, int s) {
    const int nv = s + 1;
    DesignSystem sys;
    sys.n = n;
    sys.q = q;
    sys.s = s;

    std::vector<std::vector<MultiPoly>> qm(s + 1, std::vector<MultiPoly>(s + 1, MultiPoly(nv)));
    for (int j = 0; j < s; ++j) qm[0][j] = MultiPoly::constant(nv, Rat(kraw_eval(n, q, j, 0)));
    qm[0][s] =
        MultiPoly::var(nv, s) - MultiPoly::constant(nv, Rat(kraw_partial_sum(n, q, s, 0)));
    for (int i = 1; i <= s; ++i) {
        for (int j = 0; j < s; ++j)
            qm[i][j] = MultiPoly::from_unipoly(nv, i - 1, kraw_poly(n, q, j));
        MultiPoly acc(nv);
        for (int ell = 0; ell < s; ++ell)
            acc = acc + MultiPoly::from_unipoly(nv, i - 1, kraw_poly(n, q, ell));
        qm[i][s] = -acc;
    }

    // Cofactors along the all-ones first column; their sum is det Q and the
    // j-th one times N/det(Q) is the j-th valency.
    std::vector<MultiPoly> adj(s + 1, MultiPoly(nv));
    for (int r = 0; r <= s; ++r) {
        std::vector<std::vector<MultiPoly>> minor;
        minor.reserve(s);
        for (int i = 0; i <= s; ++i) {
            if (i == r) continue;
            std::vector<MultiPoly> row(qm[i].begin() + 1, qm[i].end());
            minor.push_back(std::move(row));
        }
        MultiPoly d = mp_det(minor, nv);
        adj[r] = (r % 2 == 0) ? d : -d;
    }
    MultiPoly det_q(nv);
    for (int r = 0; r <= s; ++r) det_q = det_q + adj[r];

    MultiPoly size_var = MultiPoly::var(nv, s);
    for (int i = 1; i <= 2 * s - 1; ++i) {
        MultiPoly p = MultiPoly::constant(nv, Rat(kraw_eval(n, q, i, 0))) * det_q;
        MultiPoly sum(nv);
        for (int j = 1; j <= s; ++j)
            sum = sum + adj[j] * MultiPoly::from_unipoly(nv, j - 1, kraw_poly(n, q, i));
        p = p + size_var * sum;
        // Every cleared equation vanishes identically on the degenerate loci
        // alpha_a = alpha_b (the eigenmatrix loses rank there), which would
        // leave the ideal positive-dimensional. Divide those factors out so
        // elimination sees only the ordered degree sets.
        MultiPoly reduced = p.primitive_part();
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b) {
                MultiPoly diff = MultiPoly::var(nv, a) - MultiPoly::var(nv, b);
                while (!reduced.is_zero()) {
                    auto quot = reduced.try_divide(diff);
                    if (!quot) break;
                    reduced = std::move(*quot);
                }
            }
        sys.polys.push_back(reduced.primitive_part());
    }
    return sys;
}

MultiPoly drop_last_var(const MultiPoly& p, int s) {
    MultiPoly out(s);
    for (const auto& [m, c] : p.terms()) {
        auto exps = mono_unpack(m, s + 1);
        std::vector<unsigned> head(exps.begin(), exps.begin() + s);
        out.add_term(head, c);
    }
    return out;
}

// ---- modular prefilter ---------------------------------------------------
//
// Reduction mod a word-size prime is a ring homomorphism, so any integer
// solution of the exact system maps to a common root mod p. The prefilter
// therefore only ever rejects candidates soundly (no common residue roots,
// or a unit ideal mod p) or proposes residue tuples that exact evaluation
// confirms or refutes. Whenever it cannot certify a candidate it defers to
// the exact pipeline.
//
// The cell cache is built directly over GF(p) by the same algebra as
// build_design_system. Skipping content normalization and dividing off any
// extra alpha_a - alpha_b factors the image happens to gain cannot lose a
// genuine root: a degree set has distinct entries, all below p.

constexpr uint64_t kPrime = 2147483647ull;  // 2^31 - 1

uint64_t mod_add(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s >= kPrime ? s - kPrime : s;
}
uint64_t mod_sub(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kPrime - b; }
uint64_t mod_mul(uint64_t a, uint64_t b) { return a * b % kPrime; }
uint64_t mod_pow(uint64_t b, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mod_mul(r, b);
        b = mod_mul(b, b);
        e >>= 1;
    }
    return r;
}
uint64_t mod_inv(uint64_t a) { return mod_pow(a, kPrime - 2); }

uint64_t rat_mod(const Rat& r) {
    uint64_t num = mpz_fdiv_ui(r.get_num().get_mpz_t(), kPrime);
    uint64_t den = mpz_fdiv_ui(r.get_den().get_mpz_t(), kPrime);
    return mod_mul(num, mod_inv(den));
}

// Sparse polynomial over GF(p), terms in descending lex order.
using ModPoly = std::vector<std::pair<Mono, uint64_t>>;

struct ModTerm {
    Mono m = 0;
    std::array<uint64_t, 3> c{};  // coefficients of N^0, N^1, N^2
};

// One (q, n) cell reduced mod p once; candidates only differ in N.
struct ModCache {
    std::vector<std::vector<ModTerm>> polys;
};

ModCache build_mod_cache(const DesignSystem& sys) {
    ModCache mc;
    const int s = sys.s;
    for (const auto& p : sys.polys) {
        if (p.is_zero()) continue;
        std::map<Mono, std::array<uint64_t, 3>, std::greater<Mono>> acc;
        for (const auto& [m, c] : p.terms()) {
            auto exps = mono_unpack(m, s + 1);
            unsigned npow = exps[s];
            if (npow > 2) throw std::logic_error("design system: unexpected degree in N");
            std::vector<unsigned> head(exps.begin(), exps.begin() + s);
            auto& slot = acc[mono_pack(head)];
            slot[npow] = mod_add(slot[npow], rat_mod(c));
        }
        std::vector<ModTerm> terms;
        terms.reserve(acc.size());
        for (const auto& [m, arr] : acc) terms.push_back({m, arr});
        mc.polys.push_back(std::move(terms));
    }
    return mc;
}

std::vector<ModPoly> instantiate(const ModCache& mc, uint64_t nmod) {
    uint64_t n2 = mod_mul(nmod, nmod);
    std::vector<ModPoly> out;
    out.reserve(mc.polys.size());
    for (const auto& terms : mc.polys) {
        ModPoly mp;
        for (const auto& t : terms) {
            uint64_t c = mod_add(t.c[0], mod_add(mod_mul(t.c[1], nmod), mod_mul(t.c[2], n2)));
            if (c) mp.push_back({t.m, c});
        }
        out.push_back(std::move(mp));
    }
    return out;
}

// f - c * x^shift * g, merged.
ModPoly mod_axpy(const ModPoly& f, uint64_t c, Mono shift, const ModPoly& g, int nv) {
    ModPoly out;
    out.reserve(f.size() + g.size());
    size_t i = 0, j = 0;
    while (i < f.size() || j < g.size()) {
        Mono mg = (j < g.size()) ? mono_mul(g[j].first, shift, nv) : 0;
        if (j == g.size() || (i < f.size() && f[i].first > mg)) {
            out.push_back(f[i++]);
        } else if (i == f.size() || mg > f[i].first) {
            out.push_back({mg, mod_sub(0, mod_mul(c, g[j].second))});
            ++j;
        } else {
            uint64_t v = mod_sub(f[i].second, mod_mul(c, g[j].second));
            if (v) out.push_back({f[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

ModPoly mod_top_reduce(ModPoly f, const std::vector<ModPoly>& basis, int nv) {
    bool reduced = true;
    while (reduced && !f.empty()) {
        reduced = false;
        for (const auto& g : basis) {
            if (g.empty()) continue;
            if (!mono_divides(g[0].first, f[0].first, nv)) continue;
            uint64_t c = mod_mul(f[0].second, mod_inv(g[0].second));
            f = mod_axpy(f, c, mono_div(f[0].first, g[0].first), g, nv);
            reduced = true;
            break;
        }
    }
    return f;
}

ModPoly mod_spoly(const ModPoly& f, const ModPoly& g, int nv) {
    Mono l = mono_lcm(f[0].first, g[0].first, nv);
    ModPoly a;
    a.reserve(f.size());
    uint64_t cf = mod_inv(f[0].second);
    Mono mf = mono_div(l, f[0].first);
    for (const auto& [m, c] : f) a.push_back({mono_mul(m, mf, nv), mod_mul(c, cf)});
    return mod_axpy(a, mod_inv(g[0].second), mono_div(l, g[0].first), g, nv);
}

using Pair = std::pair<size_t, size_t>;

Pair ordered(size_t a, size_t b) { return a < b ? Pair{a, b} : Pair{b, a}; }

std::vector<ModPoly> mod_buchberger(std::vector<ModPoly> gens, int nv) {
    std::vector<ModPoly> basis;
    for (auto& g : gens)
        if (!g.empty()) basis.push_back(std::move(g));
    std::set<Pair> pending;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});

    while (!pending.empty()) {
        if (basis.size() > 96) throw std::runtime_error("modular basis blowup");
        auto best = pending.begin();
        Mono best_lcm =
            mono_lcm(basis[best->first][0].first, basis[best->second][0].first, nv);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Mono l = mono_lcm(basis[it->first][0].first, basis[it->second][0].first, nv);
            if (mono_total_degree(l, nv) < mono_total_degree(best_lcm, nv) ||
                (mono_total_degree(l, nv) == mono_total_degree(best_lcm, nv) && l < best_lcm)) {
                best = it;
                best_lcm = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        Mono li = basis[i][0].first;
        Mono lj = basis[j][0].first;
        Mono lij = mono_lcm(li, lj, nv);
        if (mono_mul(li, lj, nv) == lij) continue;
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!mono_divides(basis[k][0].first, lij, nv)) continue;
            if (pending.count(ordered(i, k)) == 0 && pending.count(ordered(j, k)) == 0)
                skip = true;
        }
        if (skip) continue;

        ModPoly h = mod_top_reduce(mod_spoly(basis[i], basis[j], nv), basis, nv);
        if (h.empty()) continue;
        size_t idx = basis.size();
        basis.push_back(std::move(h));
        for (size_t k = 0; k < idx; ++k) pending.insert({k, idx});
    }

    std::vector<char> redundant(basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < basis.size() && !redundant[i]; ++j) {
            if (i == j) continue;
            Mono li = basis[i][0].first;
            Mono lj = basis[j][0].first;
            if (lj == li ? j < i : mono_divides(lj, li, nv)) redundant[i] = 1;
        }
    }
    std::vector<ModPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i)
        if (!redundant[i]) minimal.push_back(std::move(basis[i]));
    return minimal;
}

bool mono_is_pure_power(Mono m, int var, int nv) {
    unsigned e = mono_exp(m, var, nv);
    return e > 0 && mono_total_degree(m, nv) == e;
}

// Requires every monomial of g to be a pure power of `var`.
uint64_t mod_eval_pure(const ModPoly& g, int var, uint64_t x, int nv) {
    uint64_t acc = 0;
    for (const auto& [m, c] : g) acc = mod_add(acc, mod_mul(c, mod_pow(x, mono_exp(m, var, nv))));
    return acc;
}

ModPoly mod_substitute(const ModPoly& g, int var, uint64_t x, int nv) {
    std::map<Mono, uint64_t, std::greater<Mono>> acc;
    for (const auto& [m, c] : g) {
        unsigned e = mono_exp(m, var, nv);
        auto exps = mono_unpack(m, nv);
        exps[var] = 0;
        Mono base = mono_pack(exps);
        uint64_t v = mod_add(acc.count(base) ? acc[base] : 0, mod_mul(c, mod_pow(x, e)));
        acc[base] = v;
    }
    ModPoly out;
    for (const auto& [m, c] : acc)
        if (c) out.push_back({m, c});
    return out;
}

struct ScreenOutcome {
    bool degenerate = false;
    std::vector<std::vector<int>> tuples;
};

void screen_recurse(const std::vector<ModPoly>& gens, int level, int nv, int n,
                    std::vector<int>& partial, ScreenOutcome& out) {
    std::vector<ModPoly> live;
    for (const auto& g : gens)
        if (!g.empty()) live.push_back(g);
    if (live.empty()) {
        out.degenerate = true;
        return;
    }
    for (const auto& g : live)
        if (mono_total_degree(g[0].first, nv) == 0) return;  // unit: no roots here

    if (level == 0) {
        for (int r = 0; r <= n; ++r) {
            bool ok = true;
            for (const auto& g : live)
                if (mod_eval_pure(g, 0, static_cast<uint64_t>(r), nv) != 0) {
                    ok = false;
                    break;
                }
            if (ok) {
                partial[0] = r;
                out.tuples.push_back(partial);
            }
        }
        return;
    }

    std::vector<ModPoly> basis = mod_buchberger(live, nv);
    for (const auto& g : basis)
        if (mono_total_degree(g[0].first, nv) == 0) return;
    const ModPoly* uni = nullptr;
    for (const auto& g : basis)
        if (mono_is_pure_power(g[0].first, level, nv)) {
            uni = &g;
            break;
        }
    if (!uni) {
        out.degenerate = true;
        return;
    }
    for (int r = 0; r <= n; ++r) {
        if (mod_eval_pure(*uni, level, static_cast<uint64_t>(r), nv) != 0) continue;
        std::vector<ModPoly> sub;
        sub.reserve(basis.size());
        for (const auto& g : basis) sub.push_back(mod_substitute(g, level, r, nv));
        partial[level] = r;
        screen_recurse(sub, level - 1, nv, n, partial, out);
        if (out.degenerate) return;
    }
}

// nullopt: the prefilter cannot certify this candidate.
std::optional<std::vector<std::vector<int>>> screen_candidate(const ModCache& mc, int s, int n,
                                                              const Int& N) {
    uint64_t nmod = mpz_fdiv_ui(N.get_mpz_t(), kPrime);
    ScreenOutcome out;
    std::vector<int> partial(s, 0);
    try {
        screen_recurse(instantiate(mc, nmod), s - 1, s, n, partial, out);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (out.degenerate) return std::nullopt;
    return out.tuples;
}

// ---- exact pipeline ------------------------------------------------------

void exact_recurse(const std::vector<MultiPoly>& gens, int level, int s, int n, bool top,
                   std::vector<int>& partial, std::vector<std::vector<int>>& tuples,
                   bool& unresolved) {
    std::vector<MultiPoly> live;
    for (const auto& g : gens)
        if (!g.is_zero()) live.push_back(g);
    if (live.empty()) {
        unresolved = true;  // zero ideal: nothing pins the remaining variables
        return;
    }
    std::vector<MultiPoly> basis = buchberger(live);
    for (const auto& g : basis)
        if (g.total_degree() == 0) return;  // unit ideal: no solutions

    std::optional<UniPoly> uni = univariate_element(basis, level);
    if (!uni && top && s == 4 && level == s - 1) uni = vandermonde_split(basis, 4);
    if (!uni) {
        unresolved = true;
        return;
    }

    std::vector<Int> roots = integer_roots(*uni, 0, n);
    if (level == 0) {
        for (const Int& r : roots) {
            partial[0] = static_cast<int>(r.get_si());
            tuples.push_back(partial);
        }
        return;
    }
    for (const Int& r : roots) {
        partial[level] = static_cast<int>(r.get_si());
        std::vector<MultiPoly> sub;
        sub.reserve(basis.size());
        for (const auto& g : basis) sub.push_back(g.substituted(level, Rat(r)));
        exact_recurse(sub, level - 1, s, n, false, partial, tuples, unresolved);
        if (unresolved) return;
    }
}

std::optional<std::vector<std::vector<int>>> exact_solve(const DesignSystem& sys, const Int& N) {
    const int s = sys.s;
    std::vector<MultiPoly> gens;
    for (const auto& p : sys.polys) {
        MultiPoly sub = drop_last_var(p.substituted(s, Rat(N)), s).primitive_part();
        if (!sub.is_zero()) gens.push_back(std::move(sub));
    }
    if (gens.empty()) return std::nullopt;
    std::vector<std::vector<int>> tuples;
    std::vector<int> partial(s, 0);
    bool unresolved = false;
    try {
        exact_recurse(gens, s - 1, s, sys.n, true, partial, tuples, unresolved);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (unresolved) return std::nullopt;
    return tuples;
}

// ---- validation of solved tuples -----------------------------------------

struct CellOutcome {
    std::vector<FeasibleTuple> main_rows;
    std::vector<FeasibleTuple> hadamard_rows;
    std::vector<std::string> unresolved;
};

void validate_and_emit(const DesignSystem& sys, const Int& N,
                       const std::vector<std::vector<int>>& raw, CellOutcome& out) {
    const int s = sys.s, n = sys.n, q = sys.q;
    std::set<std::vector<int>> seen;
    for (const auto& tup : raw) {
        bool increasing = tup.front() >= 1 && tup.back() <= n;
        for (int i = 1; i < s && increasing; ++i) increasing = tup[i] > tup[i - 1];
        if (!increasing) continue;
        if (!seen.insert(tup).second) continue;

        // Exact membership in the design variety (also filters residue
        // tuples the modular prefilter proposed).
        std::vector<Rat> point;
        point.reserve(s + 1);
        for (int a : tup) point.push_back(Rat(a));
        point.push_back(Rat(N));
        bool on_variety = true;
        for (const auto& p : sys.polys)
            if (p.eval(point) != 0) {
                on_variety = false;
                break;
            }
        if (!on_variety) continue;

        DesignParams dp;
        dp.N = N;
        dp.n = n;
        dp.q = q;
        dp.alphas = tup;
        dp.t = 2 * s - 1;

        FeasibleTuple row;
        row.N = N;
        row.n = n;
        row.q = q;
        row.alphas = tup;
        row.provenance.push_back("design-equations");

        SchemeParams sp;
        try {
            sp = delsarte_scheme(dp);
        } catch (const std::exception&) {
            continue;  // singular eigenmatrix: no induced scheme
        }
        if (!feasibility_report(sp).feasible) continue;
        row.provenance.push_back("scheme-feasible");

        bool strength_ok = true;
        for (int i = 1; i <= 2 * s - 1 && strength_ok; ++i) {
            Rat b(kraw_eval(n, q, i, 0));
            for (int j = 1; j <= s; ++j) b += sp.valency(j) * Rat(kraw_eval(n, q, i, tup[j - 1]));
            strength_ok = b == 0;
        }
        if (!strength_ok) continue;
        row.provenance.push_back("strength-sums");

        if (!divisibility_tests(dp).all_pass()) continue;
        row.provenance.push_back("divisibility");

        std::vector<int> xs;
        for (int a : tup) xs.push_back(n - a);
        std::sort(xs.begin(), xs.end());
        if (!e2_classify(n, q, xs).within) continue;
        row.provenance.push_back("degree-sum-bounds");

        row.tight = N == rao_bound(n, q, 2 * s - 1);
        if (s == 2) row.srg = srg_params(sp);

        if (s == 2 && q == 2 && row.tight)
            out.hadamard_rows.push_back(std::move(row));
        else
            out.main_rows.push_back(std::move(row));
    }
}

void process_cell(int s, int q, int n, const SearchOptions& opts, CellOutcome& out) {
    std::vector<Int> sizes = candidate_sizes(n, q, s);
    if (sizes.empty()) return;
    DesignSystem sys = build_design_system(n, q, s);
    ModCache mc;
    if (!opts.exact_only) mc = build_mod_cache(sys);

    for (const Int& N : sizes) {
        if (!opts.exact_only) {
            auto screened = screen_candidate(mc, s, n, N);
            if (screened) {
                validate_and_emit(sys, N, *screened, out);
                continue;
            }
        }
        auto solved = exact_solve(sys, N);
        if (solved) {
            validate_and_emit(sys, N, *solved, out);
        } else {
            std::ostringstream os;
            os << "q=" << q << " n=" << n << " N=" << N << ": elimination unresolved";
            out.unresolved.push_back(os.str());
        }
    }
}

int resolve_jobs(int flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("OA_SCHEME_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

bool row_less(const FeasibleTuple& a, const FeasibleTuple& b) {
    if (a.q != b.q) return a.q < b.q;
    if (a.n != b.n) return a.n < b.n;
    if (a.N != b.N) return a.N < b.N;
    return a.alphas < b.alphas;
}

}  // namespace

std::vector<MultiPoly> design_polynomials(const Int& N, int n, int q, int s) {
    if (s < 1 || n <= s || q < 2)
        throw std::invalid_argument("design_polynomials: need n > s >= 1 and q >= 2");
    if (s + 1 > static_cast<int>(kMonoMaxVars))
        throw std::invalid_argument("design_polynomials: degree set too large");
    DesignSystem sys = build_design_system(n, q, s);
    std::vector<MultiPoly> out;
    for (const auto& p : sys.polys)
        out.push_back(drop_last_var(p.substituted(s, Rat(N)), s).primitive_part());
    return out;
}

SearchResult feasible_tuples(int s, int q_min, int q_max, int n_min, int n_max,
                             const SearchOptions& opts) {
    if (s < 1 || s + 1 > static_cast<int>(kMonoMaxVars))
        throw std::invalid_argument("feasible_tuples: degree must lie in 1..4");
    if (q_min < 2 || q_max < q_min) throw std::invalid_argument("feasible_tuples: bad q range");
    n_min = std::max({n_min, s + 1, 2 * s - 1});  // a (2s-1)-design needs n >= 2s-1
    if (n_max < n_min) throw std::invalid_argument("feasible_tuples: bad n range");

    struct Cell {
        int q, n;
    };
    std::vector<Cell> cells;
    for (int q = q_min; q <= q_max; ++q)
        for (int n = n_min; n <= n_max; ++n) cells.push_back({q, n});

    std::vector<CellOutcome> outcomes(cells.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t idx = next.fetch_add(1);
            if (idx >= cells.size()) break;
            try {
                process_cell(s, cells[idx].q, cells[idx].n, opts, outcomes[idx]);
            } catch (const std::exception& e) {
                std::ostringstream os;
                os << "q=" << cells[idx].q << " n=" << cells[idx].n << ": " << e.what();
                outcomes[idx].unresolved.push_back(os.str());
            }
        }
    };

    int jobs = std::min<int>(resolve_jobs(opts.jobs), static_cast<int>(cells.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    SearchResult res;
    for (auto& cell : outcomes) {
        for (auto& r : cell.main_rows) res.main_rows.push_back(std::move(r));
        for (auto& r : cell.hadamard_rows) res.hadamard_rows.push_back(std::move(r));
        for (auto& u : cell.unresolved) res.unresolved.push_back(std::move(u));
    }
    std::stable_sort(res.main_rows.begin(), res.main_rows.end(), row_less);
    std::stable_sort(res.hadamard_rows.begin(), res.hadamard_rows.end(), row_less);
    return res;
}

namespace {

void render_rows(std::ostringstream& os, const std::vector<FeasibleTuple>& rows, int s) {
    os << "N,n,q";
    for (int i = 1; i <= s; ++i) os << ",alpha_" << i;
    if (s == 2) os << ",v,k,lambda,mu";
    os << ",tight\n";
    for (const auto& row : rows) {
        os << row.N << "," << row.n << "," << row.q;
        for (int a : row.alphas) os << "," << a;
        if (s == 2) {
            if (row.srg)
                os << "," << row.srg->v << "," << row.srg->k << "," << row.srg->lambda << ","
                   << row.srg->mu;
            else
                os << ",,,,";
        }
        os << "," << (row.tight ? "true" : "false") << "\n";
    }
}

}  // namespace

std::string render_csv(const SearchResult& res, int s) {
    std::ostringstream os;
    render_rows(os, res.main_rows, s);
    return os.str();
}

std::string render_text(const SearchResult& res, int s) {
    std::ostringstream os;
    os << "# feasible parameter sets\n";
    render_rows(os, res.main_rows, s);
    if (!res.hadamard_rows.empty()) {
        os << "# tight hadamard-type family (s=2, q=2)\n";
        render_rows(os, res.hadamard_rows, s);
    }
    if (!res.unresolved.empty()) {
        os << "# unresolved\n";
        for (const auto& u : res.unresolved) os << u << "\n";
    }
    return os.str();
}

std::vector<SymmetricRow> symmetric_search(int s, int n_min, int n_max) {
    if (s < 2 || s > 4) throw std::invalid_argument("symmetric_search: s must lie in 2..4");
    if (n_min < 1) n_min = 1;
    std::vector<SymmetricRow> rows;
    auto exact_sqrt = [](long v) -> std::optional<long> {
        if (v < 0) return std::nullopt;
        long m = 0;
        while (m * m < v) ++m;
        if (m * m != v) return std::nullopt;
        return m;
    };
    for (int n = n_min; n <= n_max; ++n) {
        if (s == 2) {
            if (n % 4 != 0) continue;
            rows.push_back({n, Int(2 * n), Int(n / 2), true});
        } else if (s == 3) {
            auto m = exact_sqrt(n - 2);
            if (!m || (*m != 1 && *m != 2)) continue;
            if ((n - *m) % 2 != 0 || n - *m <= 0) continue;
            Int N = Int(n) * (n - 1) + 2;
            rows.push_back({n, N, Int((n - *m) / 2), false});
        } else {
            auto m = exact_sqrt(3L * n - 8);
            if (!m || (*m != 1 && *m != 2 && *m != 4 && *m != 8)) continue;
            if ((n - *m) % 2 != 0 || n - *m <= 0) continue;
            Int inner = Int(n) * n - 3 * n + 8;
            Int prod = Int(n) * inner;
            if (!divides(3, prod)) continue;
            rows.push_back({n, prod / 3, Int((n - *m) / 2), false});
        }
    }
    return rows;
}

}  // namespace oa
