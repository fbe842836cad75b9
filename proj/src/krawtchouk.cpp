#include "oa/krawtchouk.hpp"

namespace oa {

void validate(const KrawSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("KrawSpec: n must be positive");
    if (spec.q < 2) throw std::invalid_argument("KrawSpec: q must be at least 2");
    if (spec.j < 0 || spec.j > spec.n) throw std::invalid_argument("KrawSpec: j out of [0, n]");
}

Int kraw_eval(int n, int q, int j, int x) {
    validate(KrawSpec{n, q, j});
    if (x < 0 || x > n) throw std::invalid_argument("kraw_eval: x out of [0, n]");
    Int acc = 0;
    for (int l = 0; l <= j; ++l) {
        Int term = binom_int(x, l) * binom_int(n - x, j - l) * int_pow(q - 1, j - l);
        if (l & 1)
            acc -= term;
        else
            acc += term;
    }
    return acc;
}

UniPoly kraw_poly(int n, int q, int j) {
    validate(KrawSpec{n, q, j});
    const UniPoly x = UniPoly::x();
    const UniPoly n_minus_x = UniPoly(Rat(n)) - x;
    UniPoly acc;
    for (int l = 0; l <= j; ++l) {
        UniPoly term = binom_poly(x, l) * binom_poly(n_minus_x, j - l) * Rat(int_pow(q - 1, j - l));
        acc = (l & 1) ? acc - term : acc + term;
    }
    return acc;
}

Int kraw_partial_sum(int n, int q, int s, int x) {
    if (s < 1) throw std::invalid_argument("kraw_partial_sum: s must be at least 1");
    Int acc = 0;
    for (int l = 0; l < s; ++l) acc += kraw_eval(n, q, l, x);
    return acc;
}

}  // namespace oa
