#include "oa/delsarte.hpp"

#include "oa/krawtchouk.hpp"

#include <stdexcept>

namespace oa {

namespace {

// Krawtchouk value that stays valid for integer arguments outside [0, len]
// (needed when alpha_s = n meets the length-(n-1) columns).
Rat kval(int len, int q, int j, int x) {
    if (x >= 0 && x <= len) return Rat(kraw_eval(len, q, j, x));
    return kraw_poly(len, q, j).eval(Rat(x));
}

Rat kpartial(int len, int q, int s, int x) {
    Rat total = 0;
    for (int ell = 0; ell < s; ++ell) total += kval(len, q, ell, x);
    return total;
}

}  // namespace

Mat m_matrix(int len, int q, const std::vector<int>& xs) {
    size_t s = xs.size();
    if (s == 0) throw std::invalid_argument("m_matrix: empty point list");
    Mat m(s, s);
    for (size_t i = 0; i < s; ++i)
        for (size_t j = 0; j < s; ++j)
            m.at(i, j) = Rat(kraw_eval(len, q, static_cast<int>(j), xs[i]));
    return m;
}

Mat delsarte_Q_matrix(const DesignParams& dp) {
    dp.validate();
    int s = dp.s();
    if (dp.t < 2 * s - 2) throw std::invalid_argument("delsarte_Q_matrix: need t >= 2s-2");
    Mat Q(static_cast<size_t>(s) + 1, static_cast<size_t>(s) + 1);
    for (int i = 0; i <= s; ++i) {
        int x = i == 0 ? 0 : dp.alphas[static_cast<size_t>(i) - 1];
        for (int j = 0; j < s; ++j) Q.at(i, j) = Rat(kraw_eval(dp.n, dp.q, j, x));
        Rat tail = Rat(kraw_partial_sum(dp.n, dp.q, s, x));
        if (i == 0)
            Q.at(i, s) = Rat(dp.N) - tail;
        else
            Q.at(i, s) = -tail;
    }
    return Q;
}

SchemeParams delsarte_scheme(const DesignParams& dp) {
    return scheme_from_Q(delsarte_Q_matrix(dp), dp.N);
}

Mat fission_Q_matrix(const DesignParams& dp) {
    dp.validate();
    int s = dp.s();
    if (dp.t != 2 * s - 1) throw std::invalid_argument("fission_Q_matrix: need t = 2s-1");
    bool tight = is_tight(classify_tightness(dp.N, dp.n, dp.q, dp.t));
    if (tight && dp.alphas.back() != dp.n)
        throw std::invalid_argument("fission_Q_matrix: tight designs require alpha_s = n");
    int len = dp.n - 1;

    if (tight) {
        // Rows 0..s-1: x = 0, alpha_1..alpha_{s-1}; rows s..2s-1: alpha_i - 1.
        Mat Q(2 * static_cast<size_t>(s), 2 * static_cast<size_t>(s));
        for (int i = 0; i < 2 * s; ++i) {
            bool top = i < s;
            int x = top ? (i == 0 ? 0 : dp.alphas[static_cast<size_t>(i) - 1])
                        : dp.alphas[static_cast<size_t>(i - s)] - 1;
            for (int j = 0; j < s; ++j) Q.at(i, j) = kval(len, dp.q, j, x);
            for (int j = 0; j < s; ++j) {
                Rat k = kval(len, dp.q, s - 1 - j, x);
                if (top)
                    Q.at(i, s + j) = Rat(dp.q - 1) * k;
                else
                    Q.at(i, s + j) = -k;
            }
        }
        return Q;
    }

    // Rows 0..s: x = 0, alpha_1..alpha_s; rows s+1..2s: alpha_i - 1.
    Mat Q(2 * static_cast<size_t>(s) + 1, 2 * static_cast<size_t>(s) + 1);
    for (int i = 0; i <= 2 * s; ++i) {
        bool top = i <= s;
        int x = top ? (i == 0 ? 0 : dp.alphas[static_cast<size_t>(i) - 1])
                    : dp.alphas[static_cast<size_t>(i - s) - 1] - 1;
        for (int j = 0; j < s; ++j) Q.at(i, j) = kval(len, dp.q, j, x);
        if (top) {
            Rat tail = Rat(dp.q) * kpartial(len, dp.q, s, x);
            if (i == 0)
                Q.at(i, s) = Rat(dp.N) - tail;
            else
                Q.at(i, s) = -tail;
        } else {
            Q.at(i, s) = 0;
        }
        for (int j = 0; j < s; ++j) {
            Rat k = kval(len, dp.q, s - 1 - j, x);
            if (top)
                Q.at(i, s + 1 + j) = Rat(dp.q - 1) * k;
            else
                Q.at(i, s + 1 + j) = -k;
        }
    }
    return Q;
}

SchemeParams fission_scheme(const DesignParams& dp) {
    return scheme_from_Q(fission_Q_matrix(dp), dp.N);
}

Rat cg_value(int q, const std::vector<int>& alphas) {
    size_t s = alphas.size();
    Int num = int_pow(Int(q), s * (s - 1) / 2);
    for (size_t i = 0; i < s; ++i)
        for (size_t j = i + 1; j < s; ++j) num *= Int(alphas[i] - alphas[j]);
    Int den = 1;
    for (size_t i = 1; i < s; ++i) den *= factorial_int(static_cast<unsigned long>(i));
    return make_rat(num, den);
}

Rat det_fission_Q(const DesignParams& dp) {
    int s = dp.s();
    bool tight = is_tight(classify_tightness(dp.N, dp.n, dp.q, 2 * s - 1));
    Rat cg = cg_value(dp.q, dp.alphas);
    if (!tight) return Rat(dp.N) * Rat(int_pow(Int(dp.q), static_cast<unsigned long>(s))) * cg * cg;
    std::vector<int> head(dp.alphas.begin(), dp.alphas.end() - 1);
    Rat value = Rat(dp.N) * Rat(int_pow(Int(dp.q), static_cast<unsigned long>(s) - 1)) * cg * cg_value(dp.q, head);
    return value < 0 ? -value : value;
}

DivisibilityReport divisibility_tests(const DesignParams& dp) {
    int s = dp.s();
    DivisibilityReport rep;
    rep.cg = cg_value(dp.q, dp.alphas);
    rep.cg_integral = is_integer(rep.cg);
    if (rep.cg_integral) {
        Int c = to_int(rep.cg);
        if (c < 0) c = -c;
        rep.cg_divides = c == 0 || divides(c, int_pow(dp.N, static_cast<unsigned long>(s)));
    }
    rep.tight = is_tight(classify_tightness(dp.N, dp.n, dp.q, 2 * s - 1));
    Rat base = rep.tight ? cg_value(dp.q, std::vector<int>(dp.alphas.begin(), dp.alphas.end() - 1)) : rep.cg;
    rep.fission_value = Rat(int_pow(Int(dp.q), static_cast<unsigned long>(s))) * base * base;
    rep.fission_integral = is_integer(rep.fission_value);
    if (rep.fission_integral) {
        Int f = to_int(rep.fission_value);
        unsigned long power = rep.tight ? 2 * static_cast<unsigned long>(s) - 1 : 2 * static_cast<unsigned long>(s);
        rep.fission_divides = f == 0 || divides(f, int_pow(dp.N, power));
    }
    return rep;
}

bool wilson_even_identity(const DesignParams& dp) {
    int s = dp.s();
    if (dp.t != 2 * s) return false;
    UniPoly lhs = Rat(dp.N);
    for (int a : dp.alphas) lhs = lhs * (UniPoly(Rat(1)) - UniPoly::x() * make_rat(1, a));
    UniPoly rhs;
    for (int j = 0; j <= s; ++j) rhs = rhs + kraw_poly(dp.n, dp.q, j);
    return lhs == rhs;
}

}  // namespace oa
