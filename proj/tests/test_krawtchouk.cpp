#include "doctest.h"

#include "oa/design.hpp"
#include "oa/krawtchouk.hpp"
#include "oa/rat.hpp"

using namespace oa;

TEST_CASE("pinned Krawtchouk values") {
    CHECK(kraw_eval(11, 3, 1, 6) == Int(4));
    CHECK(kraw_eval(11, 3, 1, 9) == Int(-5));
    CHECK(kraw_eval(11, 3, 2, 0) == Int(220));
    CHECK(kraw_eval(5, 2, 2, 3) == Int(-2));
    CHECK_THROWS_AS(kraw_eval(5, 2, 1, 6), std::invalid_argument);
}

TEST_CASE("value at zero is the sphere size") {
    for (int q : {2, 3, 4, 5})
        for (int n = 1; n <= 10; ++n)
            for (int j = 0; j <= n; ++j)
                CHECK(kraw_eval(n, q, j, 0) ==
                      binom_int(static_cast<unsigned long>(n), static_cast<unsigned long>(j)) *
                          int_pow(Int(q - 1), static_cast<unsigned long>(j)));
}

TEST_CASE("orthogonality with binomial weights") {
    for (int q : {2, 3, 5}) {
        for (int n = 1; n <= 8; ++n) {
            for (int i = 0; i <= n; ++i) {
                for (int j = i; j <= n; ++j) {
                    Int acc(0);
                    for (int x = 0; x <= n; ++x)
                        acc += binom_int(static_cast<unsigned long>(n),
                                         static_cast<unsigned long>(x)) *
                               int_pow(Int(q - 1), static_cast<unsigned long>(x)) *
                               kraw_eval(n, q, i, x) * kraw_eval(n, q, j, x);
                    Int expected =
                        i == j ? Int(int_pow(Int(q), static_cast<unsigned long>(n)) *
                                     binom_int(static_cast<unsigned long>(n),
                                               static_cast<unsigned long>(i)) *
                                     int_pow(Int(q - 1), static_cast<unsigned long>(i)))
                               : Int(0);
                    CHECK(acc == expected);
                }
            }
        }
    }
}

TEST_CASE("binary reflection symmetry") {
    for (int n = 1; n <= 9; ++n)
        for (int j = 0; j <= n; ++j)
            for (int x = 0; x <= n; ++x) {
                Int lhs = kraw_eval(n, 2, j, n - x);
                Int rhs = kraw_eval(n, 2, j, x);
                if (j % 2) rhs = -rhs;
                CHECK(lhs == rhs);
            }
}

TEST_CASE("polynomial form agrees with evaluation") {
    for (int q : {2, 3, 4})
        for (int n = 1; n <= 9; ++n)
            for (int j = 0; j <= n; ++j) {
                UniPoly p = kraw_poly(n, q, j);
                CHECK(p.degree() == j);
                for (int x = 0; x <= n; ++x) CHECK(p.eval(Rat(x)) == Rat(kraw_eval(n, q, j, x)));
            }
    UniPoly lin = kraw_poly(7, 3, 1);
    UniPoly expected = UniPoly(Rat(2 * 7)) - UniPoly::x() * Rat(3);
    CHECK(lin == expected);
}

TEST_CASE("partial sums") {
    CHECK(kraw_partial_sum(11, 3, 2, 0) == Rat(23));
    CHECK(kraw_partial_sum(11, 3, 1, 0) == Rat(1));
    for (int q = 2; q <= 7; ++q) CHECK(kraw_partial_sum(q + 1, q, 2, 0) == Rat(q * q));
    Rat acc(0);
    for (int ell = 0; ell < 3; ++ell) acc += Rat(kraw_eval(9, 2, ell, 4));
    CHECK(kraw_partial_sum(9, 2, 3, 4) == acc);
}

TEST_CASE("design size bounds") {
    CHECK(rao_bound(5, 2, 3) == Int(10));
    CHECK(rao_bound(5, 2, 4) == Int(16));
    CHECK(rao_bound(23, 2, 6) == Int(2048));
    CHECK(rao_bound(24, 2, 7) == Int(4096));
    CHECK(rao_bound(12, 3, 5) == Int(729));
    CHECK(absolute_bound(5, 2, 2) == Int(16));
    for (int q = 2; q <= 9; ++q) CHECK(rao_bound(q + 2, q, 3) == int_pow(Int(q), 3));
    for (int q : {2, 3, 4})
        for (int n = 2; n <= 12; ++n)
            for (int s = 1; 2 * s <= n; ++s) CHECK(rao_bound(n, q, 2 * s) == absolute_bound(n, q, s));
}

TEST_CASE("tightness classification") {
    CHECK(classify_tightness(Int(16), 5, 2, 4) == TightnessClass::TightEven);
    CHECK(classify_tightness(Int(4096), 24, 2, 7) == TightnessClass::TightOdd);
    CHECK(classify_tightness(Int(243), 11, 3, 4) == TightnessClass::TightEven);
    CHECK(classify_tightness(Int(729), 11, 3, 5) == TightnessClass::NontightOdd);
    CHECK(to_string(TightnessClass::TightOdd) == "tight-odd");
    CHECK_THROWS_AS(classify_tightness(Int(9), 5, 2, 3), std::invalid_argument);
}
