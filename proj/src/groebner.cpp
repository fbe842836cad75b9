#include "oa/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace oa {

namespace {

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g) {
    const int nv = f.nvars();
    Mono lf = f.leading_mono();
    Mono lg = g.leading_mono();
    Mono l = mono_lcm(lf, lg, nv);
    MultiPoly uf(nv);
    uf.add_term(mono_div(l, lf), Rat(1) / f.leading_coeff());
    MultiPoly ug(nv);
    ug.add_term(mono_div(l, lg), Rat(1) / g.leading_coeff());
    return uf * f - ug * g;
}

using Pair = std::pair<size_t, size_t>;

Pair ordered(size_t a, size_t b) { return a < b ? Pair{a, b} : Pair{b, a}; }

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis) {
    MultiPoly r = f;
    const int nv = f.nvars();
    bool changed = true;
    while (changed && !r.is_zero()) {
        changed = false;
        for (const auto& [m, c] : r.terms()) {
            for (const auto& g : basis) {
                if (g.is_zero()) continue;
                Mono lm = g.leading_mono();
                if (!mono_divides(lm, m, nv)) continue;
                MultiPoly t(nv);
                t.add_term(mono_div(m, lm), c / g.leading_coeff());
                r = r - t * g;
                changed = true;
                break;
            }
            if (changed) break;
        }
    }
    return r;
}

std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens) {
    std::vector<MultiPoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.primitive_part());
    if (basis.empty()) return basis;
    const int nv = basis[0].nvars();

    std::set<Pair> pending;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pending.insert({i, j});

    while (!pending.empty()) {
        // Normal selection strategy: smallest pair lcm first.
        auto best = pending.begin();
        Mono best_lcm = mono_lcm(basis[best->first].leading_mono(),
                                 basis[best->second].leading_mono(), nv);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Mono l = mono_lcm(basis[it->first].leading_mono(),
                              basis[it->second].leading_mono(), nv);
            if (mono_total_degree(l, nv) < mono_total_degree(best_lcm, nv) ||
                (mono_total_degree(l, nv) == mono_total_degree(best_lcm, nv) && l < best_lcm)) {
                best = it;
                best_lcm = l;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        Mono li = basis[i].leading_mono();
        Mono lj = basis[j].leading_mono();
        Mono lij = mono_lcm(li, lj, nv);
        // Product criterion: coprime leading monomials reduce to zero.
        if (mono_mul(li, lj, nv) == lij) continue;
        // Chain criterion: a third element dividing the lcm whose pairs with
        // i and j were both treated already.
        bool skip = false;
        for (size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!mono_divides(basis[k].leading_mono(), lij, nv)) continue;
            if (pending.count(ordered(i, k)) == 0 && pending.count(ordered(j, k)) == 0)
                skip = true;
        }
        if (skip) continue;

        MultiPoly h = normal_form(s_poly(basis[i], basis[j]), basis).primitive_part();
        if (h.is_zero()) continue;
        size_t idx = basis.size();
        basis.push_back(std::move(h));
        for (size_t k = 0; k < idx; ++k) pending.insert({k, idx});
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            Mono li = basis[i].leading_mono();
            Mono lj = basis[j].leading_mono();
            if (lj == li ? j < i : mono_divides(lj, li, nv)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Inter-reduce to the unique reduced basis.
    bool stable = false;
    while (!stable) {
        stable = true;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<MultiPoly> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            MultiPoly r = normal_form(minimal[i], others).primitive_part();
            if (!(r == minimal[i])) {
                if (r.is_zero()) {
                    minimal.erase(minimal.begin() + i);
                } else {
                    minimal[i] = std::move(r);
                }
                stable = false;
                break;
            }
        }
    }

    for (auto& g : minimal) g = g.monic();
    std::sort(minimal.begin(), minimal.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return a.leading_mono() < b.leading_mono();
    });
    return minimal;
}

std::optional<UniPoly> univariate_element(const std::vector<MultiPoly>& basis, int var) {
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        if (!g.is_univariate_in(var)) continue;
        UniPoly u = g.to_unipoly(var);
        if (u.degree() >= 1) return u;
    }
    return std::nullopt;
}

EliminantResult eliminate_univariate(const std::vector<MultiPoly>& basis) {
    EliminantResult res;
    if (basis.empty()) return res;
    const int nv = basis[0].nvars();

    for (const auto& g : basis) {
        if (!g.is_zero() && g.total_degree() == 0) {
            res.unit = true;
            res.zero_dimensional = true;
            res.eliminant = UniPoly(g.leading_coeff());
            return res;
        }
    }

    std::vector<bool> pure(nv, false);
    for (const auto& g : basis) {
        Mono lm = g.leading_mono();
        auto exps = mono_unpack(lm, nv);
        int support = -1;
        bool single = true;
        for (int v = 0; v < nv; ++v) {
            if (exps[v] == 0) continue;
            if (support >= 0) single = false;
            support = v;
        }
        if (single && support >= 0) pure[support] = true;
    }
    res.zero_dimensional = std::all_of(pure.begin(), pure.end(), [](bool b) { return b; });
    res.eliminant = univariate_element(basis, nv - 1);
    return res;
}

std::optional<UniPoly> vandermonde_split(const std::vector<MultiPoly>& basis, int nvars) {
    if (nvars != 4)
        throw std::invalid_argument("vandermonde_split: only the four-variable case splits");
    MultiPoly vand = MultiPoly::constant(4, Rat(1));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            vand = vand * (MultiPoly::var(4, i) - MultiPoly::var(4, j));

    std::vector<size_t> order(basis.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return basis[a].total_degree() > basis[b].total_degree();
    });
    for (size_t idx : order) {
        const MultiPoly& g = basis[idx];
        if (g.is_zero()) continue;
        auto q = g.try_divide(vand);
        if (q && q->is_univariate_in(3)) return q->to_unipoly(3);
    }
    return std::nullopt;
}

std::vector<Int> integer_roots(const UniPoly& p, long lo, long hi) {
    if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
    std::vector<Int> roots;
    for (long r = lo; r <= hi; ++r)
        if (p.eval(Rat(r)) == 0) roots.emplace_back(r);
    return roots;
}

}  // namespace oa
