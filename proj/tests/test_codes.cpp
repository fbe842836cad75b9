#include "doctest.h"

#include "oa/codes.hpp"
#include "oa/delsarte.hpp"

#include <sstream>

using namespace oa;

TEST_CASE("code construction validates input") {
    CHECK_THROWS_AS(make_code(2, 2, {{0, 1}, {0, 1}}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(make_code(2, 2, {{0, 2}}), std::invalid_argument);          // bad symbol
    CHECK_THROWS_AS(make_code(2, 2, {{0, 1, 0}}), std::invalid_argument);       // bad length
    CHECK_THROWS_AS(builtin_code("unheard-of"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_code("repetition-dual(1)"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_code("hadamard(6)"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_code("hyperoval-oa(3)"), std::invalid_argument);
}

TEST_CASE("even-weight code") {
    Code c = builtin_code("repetition-dual(6)");
    DistanceProfile p = distance_profile(c);
    CHECK(p.n == 6);
    CHECK(p.q == 2);
    CHECK(p.N == Int(32));
    CHECK(p.strength == 5);
    CHECK(p.tightness == TightnessClass::TightOdd);
    CHECK(p.degree_set == std::vector<int>{2, 4, 6});
    CHECK(p.dual_degrees == std::vector<int>{0, 2, 4});
    CHECK(oa_strength_direct(c, 5));
    CHECK_FALSE(oa_strength_direct(c, 6));
}

TEST_CASE("ternary golay family") {
    DistanceProfile g = distance_profile(builtin_code("golay-ternary"));
    CHECK(g.n == 11);
    CHECK(g.N == Int(729));
    CHECK(g.strength == 5);
    CHECK(g.tightness == TightnessClass::NontightOdd);
    CHECK(g.degree_set == std::vector<int>{5, 6, 8, 9, 11});

    DistanceProfile d = distance_profile(builtin_code("golay-ternary-dual"));
    CHECK(d.N == Int(243));
    CHECK(d.strength == 4);
    CHECK(d.tightness == TightnessClass::TightEven);
    CHECK(d.degree_set == std::vector<int>{6, 9});
    CHECK(d.dual_degrees == std::vector<int>{2, 5});
    CHECK(d.lambdas.back() == Rat(3));

    DistanceProfile e = distance_profile(builtin_code("golay-ternary-ext"));
    CHECK(e.n == 12);
    CHECK(e.N == Int(729));
    CHECK(e.strength == 5);
    CHECK(e.tightness == TightnessClass::TightOdd);
    CHECK(e.degree_set == std::vector<int>{6, 9, 12});
    CHECK(e.dual_degrees == std::vector<int>{0, 3, 6});
}

TEST_CASE("binary golay family") {
    DistanceProfile g = distance_profile(builtin_code("golay-binary"));
    CHECK(g.n == 23);
    CHECK(g.N == Int(4096));
    CHECK(g.strength == 7);
    CHECK(g.tightness == TightnessClass::NontightOdd);
    CHECK(g.degree_set == std::vector<int>{7, 8, 11, 12, 15, 16, 23});

    DistanceProfile d = distance_profile(builtin_code("golay-binary-dual"));
    CHECK(d.N == Int(2048));
    CHECK(d.strength == 6);
    CHECK(d.tightness == TightnessClass::TightEven);
    CHECK(d.degree_set == std::vector<int>{8, 12, 16});

    DistanceProfile e = distance_profile(builtin_code("golay-binary-ext"));
    CHECK(e.n == 24);
    CHECK(e.N == Int(4096));
    CHECK(e.strength == 7);
    CHECK(e.tightness == TightnessClass::TightOdd);
    CHECK(e.degree_set == std::vector<int>{8, 12, 16, 24});
}

TEST_CASE("sylvester hadamard code") {
    Code c = builtin_code("hadamard(8)");
    DistanceProfile p = distance_profile(c);
    CHECK(p.n == 8);
    CHECK(p.N == Int(16));
    CHECK(p.strength == 3);
    CHECK(p.tightness == TightnessClass::TightOdd);
    CHECK(p.degree_set == std::vector<int>{4, 8});
    CHECK(oa_strength_direct(c, 3));
    CHECK_FALSE(oa_strength_direct(c, 4));
}

TEST_CASE("hyperoval orthogonal array") {
    Code c = builtin_code("hyperoval-oa(4)");
    DistanceProfile p = distance_profile(c);
    CHECK(p.n == 6);
    CHECK(p.q == 4);
    CHECK(p.N == Int(64));
    CHECK(p.strength == 3);
    CHECK(p.tightness == TightnessClass::TightOdd);
    CHECK(p.degree_set == std::vector<int>{4, 6});
    CHECK(oa_strength_direct(c, 3));

    DesignParams dp;
    dp.N = p.N;
    dp.n = p.n;
    dp.q = p.q;
    dp.alphas = p.degree_set;
    dp.t = 3;
    auto srg = srg_params(delsarte_scheme(dp));
    REQUIRE(srg.has_value());
    CHECK(srg->v == Int(64));
    CHECK(srg->k == Int(18));
    CHECK(srg->lambda == Int(2));
    CHECK(srg->mu == Int(6));
}

TEST_CASE("hadamard matrix to code") {
    Mat h = Mat::from_rows({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}});
    Code c = hadamard_code(h);
    CHECK(c.n == 2);
    CHECK(c.size() == Int(4));
    DistanceProfile p = distance_profile(c);
    CHECK(p.strength == 2);

    Mat bad = Mat::from_rows({{Rat(1), Rat(1)}, {Rat(1), Rat(1)}});
    CHECK_THROWS_AS(hadamard_code(bad), std::invalid_argument);
}

TEST_CASE("pm1 matrix parsing") {
    std::istringstream in("1 1\n1 -1\n");
    Mat h = read_pm1_matrix(in);
    CHECK(h.rows() == 2);
    CHECK(h.at(1, 1) == Rat(-1));
    std::istringstream ragged("1 1\n1\n");
    CHECK_THROWS_AS(read_pm1_matrix(ragged), std::invalid_argument);
}

TEST_CASE("code file round trip") {
    Code c = builtin_code("repetition-dual(4)");
    std::ostringstream os;
    write_code(c, os);
    std::istringstream is(os.str());
    Code back = read_code(is);
    CHECK(back.n == c.n);
    CHECK(back.q == c.q);
    CHECK(back.words == c.words);
    CHECK(back.dist == c.dist);
}

TEST_CASE("contraction chain reaches the small tight arrays") {
    Code c = builtin_code("repetition-dual(6)");
    Code c1 = contraction(c, 0, 0);
    DistanceProfile p1 = distance_profile(c1);
    CHECK(p1.n == 5);
    CHECK(p1.N == Int(16));
    CHECK(p1.strength == 4);
    CHECK(p1.tightness == TightnessClass::TightEven);
    CHECK(p1.degree_set == std::vector<int>{2, 4});

    Code c2 = contraction(c1, 0, 0);
    DistanceProfile p2 = distance_profile(c2);
    CHECK(p2.n == 4);
    CHECK(p2.N == Int(8));
    CHECK(p2.strength == 3);
    CHECK(p2.tightness == TightnessClass::TightOdd);

    CHECK_THROWS_AS(contraction(make_code(2, 2, {{0, 0}}), 0, 1), std::invalid_argument);
}

TEST_CASE("direct strength counting on a non design") {
    // distances {1,2} but unbalanced columns: strength 0
    Code c = make_code(2, 2, {{0, 0}, {0, 1}, {1, 1}});
    DistanceProfile p = distance_profile(c);
    CHECK(p.strength == 0);
    CHECK_FALSE(oa_strength_direct(c, 1));
}
