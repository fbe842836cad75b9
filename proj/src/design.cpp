#include "oa/design.hpp"

#include <stdexcept>

namespace oa {

std::string to_string(TightnessClass t) {
    switch (t) {
        case TightnessClass::TightOdd: return "tight-odd";
        case TightnessClass::NontightOdd: return "nontight-odd";
        case TightnessClass::TightEven: return "tight-even";
        case TightnessClass::NontightEven: return "nontight-even";
    }
    throw std::logic_error("unreachable");
}

namespace {

Int ball_size(int n, int q, int e) {
    // sum_{k=0}^{e} C(n,k)(q-1)^k
    Int total = 0;
    for (int k = 0; k <= e; ++k) {
        total += binom_int(static_cast<unsigned long>(n), static_cast<unsigned long>(k)) *
                 int_pow(Int(q - 1), static_cast<unsigned long>(k));
    }
    return total;
}

}  // namespace

Int rao_bound(int n, int q, int t) {
    if (n < 1 || q < 2 || t < 0 || t > n)
        throw std::invalid_argument("rao_bound: need n >= 1, q >= 2, 0 <= t <= n");
    if (t % 2 == 0) {
        return ball_size(n, q, t / 2);
    }
    int e = (t + 1) / 2;
    Int total = ball_size(n, q, e - 1);
    total += binom_int(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(e - 1)) *
             int_pow(Int(q - 1), static_cast<unsigned long>(e));
    return total;
}

Int absolute_bound(int n, int q, int s) {
    if (n < 1 || q < 2 || s < 0 || s > n)
        throw std::invalid_argument("absolute_bound: need n >= 1, q >= 2, 0 <= s <= n");
    return ball_size(n, q, s);
}

TightnessClass classify_tightness(const Int& N, int n, int q, int t) {
    Int bound = rao_bound(n, q, t);
    if (N < bound) throw std::invalid_argument("classify_tightness: N below the strength bound");
    bool tight = (N == bound);
    if (t % 2 == 0) return tight ? TightnessClass::TightEven : TightnessClass::NontightEven;
    return tight ? TightnessClass::TightOdd : TightnessClass::NontightOdd;
}

void DesignParams::validate() const {
    if (n < 1 || q < 2) throw std::invalid_argument("DesignParams: need n >= 1, q >= 2");
    if (alphas.empty()) throw std::invalid_argument("DesignParams: empty degree set");
    int prev = 0;
    for (int a : alphas) {
        if (a <= prev || a > n) throw std::invalid_argument("DesignParams: alphas must be strictly increasing in 1..n");
        prev = a;
    }
    if (t < 0 || t > 2 * s()) throw std::invalid_argument("DesignParams: need 0 <= t <= 2s");
    if (N < 1) throw std::invalid_argument("DesignParams: need N >= 1");
    if (N > absolute_bound(n, q, s())) throw std::invalid_argument("DesignParams: N exceeds the degree bound");
}

}  // namespace oa
