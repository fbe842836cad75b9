#include "oa/extremal.hpp"

#include <stdexcept>

namespace oa {

namespace {

void check_xs(const std::vector<int>& xs) {
    if (xs.empty()) throw std::invalid_argument("dual degree set must be nonempty");
    if (xs.front() < 0) throw std::invalid_argument("dual degrees must be nonnegative");
    for (size_t i = 1; i < xs.size(); ++i)
        if (xs[i] <= xs[i - 1])
            throw std::invalid_argument("dual degrees must be strictly increasing");
}

// Binomial coefficient with C(n, k) = 0 for k < 0.
Int binom_z(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return binom_int(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

}  // namespace

Int FTable::f(int k, int j) const {
    if (k < 0 || k > s() || j < 0 || j > k) return 0;
    return values[k][j];
}

FTable f_table(const std::vector<int>& xs) {
    check_xs(xs);
    FTable ft;
    ft.xs = xs;
    int s = ft.s();
    ft.values.assign(s + 1, {});
    ft.values[0] = {Int(1)};
    for (int k = 1; k <= s; ++k) {
        ft.values[k].assign(k + 1, Int(0));
        for (int j = 0; j <= k; ++j) {
            Int prev = (j <= k - 1) ? ft.values[k - 1][j] : Int(0);
            Int lower = (j >= 1) ? ft.values[k - 1][j - 1] : Int(0);
            ft.values[k][j] = prev + Int(xs[k - 1] - k + j) * lower;
        }
    }
    return ft;
}

UniPoly elementary_product(const std::vector<int>& xs) {
    check_xs(xs);
    UniPoly p(Rat(1));
    for (int x : xs) p = p * (UniPoly::x() - UniPoly(Rat(x)));
    return p;
}

UniPoly falling_expansion(const FTable& ft) {
    int s = ft.s();
    UniPoly acc(Rat(0));
    for (int j = 0; j <= s; ++j) {
        UniPoly term = falling_factorial(UniPoly::x(), static_cast<unsigned>(s - j)) *
                       UniPoly(Rat(ft.f(s, j)));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

Mat m_s_matrix(const std::vector<int>& xs, const std::vector<Rat>& as) {
    check_xs(xs);
    size_t s = xs.size();
    if (as.size() != s + 1)
        throw std::invalid_argument("m_s_matrix: need s+1 border entries");
    Mat m(s + 1, s + 1);
    for (size_t i = 0; i <= s; ++i) {
        m.at(i, 0) = as[i];
        for (size_t c = 1; c <= s; ++c)
            m.at(i, c) = falling_factorial(Rat(xs[c - 1]), static_cast<unsigned>(i));
    }
    return m;
}

Rat det_ms(const std::vector<int>& xs, const std::vector<Rat>& as) {
    check_xs(xs);
    int s = static_cast<int>(xs.size());
    if (as.size() != static_cast<size_t>(s) + 1)
        throw std::invalid_argument("det_ms: need s+1 border entries");
    FTable ft = f_table(xs);
    Rat sum(0);
    for (int j = 0; j <= s; ++j) {
        Rat term = as[s - j] * Rat(ft.f(s, j));
        sum += (j % 2 == 0) ? term : -term;
    }
    Rat vand(1);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) vand *= Rat(xs[j] - xs[i]);
    Rat signed_vand = (s % 2 == 0) ? vand : -vand;
    return signed_vand * sum;
}

std::vector<Rat> design_identity_residuals(int n, int q, const Int& N,
                                           const std::vector<int>& xs) {
    check_xs(xs);
    if (n < 1 || q < 2) throw std::invalid_argument("design_identity_residuals: bad n or q");
    int s = static_cast<int>(xs.size());
    FTable ft = f_table(xs);
    std::vector<Rat> lambdas;
    for (int i = 0; i <= s; ++i) lambdas.push_back(make_rat(N, int_pow(q, i)));

    auto shifted_sum = [&](int ell) {
        Rat acc(0);
        for (int j = 0; j <= s; ++j) {
            Rat term = falling_factorial(Rat(n - ell), static_cast<unsigned>(s - j)) *
                       lambdas[s - j] * Rat(ft.f(s, j));
            acc += (j % 2 == 0) ? term : -term;
        }
        return acc;
    };

    std::vector<Rat> residuals;
    Rat pn(1);
    for (int x : xs) pn *= Rat(n - x);
    residuals.push_back(shifted_sum(0) - pn);
    for (int ell = 1; ell <= s - 1; ++ell) residuals.push_back(shifted_sum(ell));
    return residuals;
}

std::vector<Rat> design_identity_residuals(const DistanceProfile& profile) {
    return design_identity_residuals(profile.n, profile.q, profile.N, profile.dual_degrees);
}

std::vector<Rat> e5_check(int n, int q, int s, const Rat& f1) {
    if (s < 1 || n <= s || q < 2) throw std::invalid_argument("e5_check: need n > s >= 1, q >= 2");
    std::vector<Rat> predicted;
    for (int j = 1; j <= s; ++j) {
        Rat lead = falling_factorial(Rat(n - s + j - 1), static_cast<unsigned>(j - 1)) /
                   Rat(int_pow(q, j - 1));
        Rat inner = Rat(binom_z(s - 1, j - 1)) * f1 -
                    Rat(Int(s - 1) * binom_z(s - 1, j - 1) - binom_z(s - 1, j)) *
                        make_rat(n - s, q);
        predicted.push_back(lead * inner);
    }
    return predicted;
}

std::pair<Rat, Rat> e2_bounds(int n, int q, int s) {
    if (s < 1 || n <= s || q < 2) throw std::invalid_argument("e2_bounds: need n > s >= 1, q >= 2");
    Rat base = make_rat(Int(s) * (s - 1), 2);
    Rat lower = Rat(s - 1) * make_rat(n - s, q) + base;
    Rat upper = Rat(s) * make_rat(n - s, q) + base;
    return {lower, upper};
}

SumClassification e2_classify(int n, int q, const std::vector<int>& xs) {
    check_xs(xs);
    int s = static_cast<int>(xs.size());
    auto [lower, upper] = e2_bounds(n, q, s);
    SumClassification c;
    c.lower = lower;
    c.upper = upper;
    Int sum = 0;
    for (int x : xs) sum += x;
    c.sum = Rat(sum);
    c.within = c.sum >= lower && c.sum <= upper;
    c.at_lower = c.sum == lower;
    c.at_upper = c.sum == upper;
    return c;
}

std::vector<PrefixVerdict> e3_check(const std::vector<int>& xs) {
    check_xs(xs);
    std::vector<PrefixVerdict> verdicts;
    Int sum = 0;
    bool pattern = true;
    for (size_t m = 1; m <= xs.size(); ++m) {
        sum += xs[m - 1];
        pattern = pattern && xs[m - 1] == 2 * static_cast<int>(m) - 2;
        PrefixVerdict v;
        v.m = static_cast<int>(m);
        v.sum = sum;
        v.bound = Int(static_cast<long>(m) * (static_cast<long>(m) - 1));
        v.ok = v.sum >= v.bound;
        v.equality = v.sum == v.bound;
        verdicts.push_back(std::move(v));
    }
    return verdicts;
}

MelzakReport rref_a_and_melzak(int n, int q, int s) {
    if (s < 2 || n <= s || q < 2)
        throw std::invalid_argument("rref_a_and_melzak: need n > s >= 2, q >= 2");
    MelzakReport rep;

    // Coefficient matrix of the shifted moment identities in the unknowns
    // (F_s, ..., F_0). Every entry carries the same overall factor N, so the
    // echelon form is computed with N = 1.
    Mat a(s - 1, s + 1);
    for (int ell = 1; ell <= s - 1; ++ell)
        for (int j = 0; j <= s; ++j) {
            Rat v = falling_factorial(Rat(n - ell), static_cast<unsigned>(j)) /
                    Rat(int_pow(q, j));
            a.at(ell - 1, j) = ((s - j) % 2 == 0) ? v : -v;
        }
    rep.rref = a.rref();

    Mat expected(s - 1, s + 1);
    for (int i = 1; i <= s - 1; ++i) {
        for (int j = 0; j <= s - 2; ++j) expected.at(i - 1, j) = (j == i - 1) ? 1 : 0;
        expected.at(i - 1, s - 1) =
            -Rat(binom_z(s - 1, i - 1)) *
            falling_factorial(Rat(n - i), static_cast<unsigned>(s - i)) / Rat(int_pow(q, s - i));
        expected.at(i - 1, s) =
            Rat(Int(s - 1) * binom_z(s - 1, i - 1) - binom_z(s - 1, i - 2)) *
            falling_factorial(Rat(n - i), static_cast<unsigned>(s - i + 1)) /
            Rat(int_pow(q, s - i + 1));
    }
    rep.rref_matches = rep.rref == expected;

    Int m_abs = absolute_bound(n, q, s);
    auto m_term = [&](int j) -> Rat { return make_rat(m_abs, int_pow(q, s - j)) - 1; };

    Rat lhs1(0);
    for (int j = 1; j <= s; ++j) {
        Rat term = m_term(j) * Rat(binom_z(s - 1, j - 1)) /
                   (Rat(n - s + j) * Rat(int_pow(q, j - 1)));
        lhs1 += (j % 2 == 1) ? term : -term;
    }
    rep.melzak1_lhs = lhs1;
    rep.melzak1_rhs = Rat(int_pow(q - 1, s)) / (Rat(s) * Rat(int_pow(q, s - 1)));

    Rat lhs2(0);
    for (int j = 0; j <= s; ++j) {
        Rat weight = Rat(Int(s - 1) * binom_z(s - 1, j - 1) - binom_z(s - 1, j));
        Rat term = m_term(j) * Rat(n - s) * weight / (Rat(n - s + j) * Rat(int_pow(q, j)));
        lhs2 += (j % 2 == 1) ? term : -term;
    }
    rep.melzak2_lhs = lhs2;
    rep.melzak2_rhs = Rat(n - s) * Rat(int_pow(q - 1, s)) / Rat(int_pow(q, s));
    return rep;
}

}  // namespace oa
