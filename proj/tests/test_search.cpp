#include "doctest.h"

#include "oa/design.hpp"
#include "oa/search.hpp"

#include <string>

using namespace oa;

TEST_CASE("candidate size enumeration") {
    CHECK(candidate_sizes(5, 2, 2) == std::vector<Int>{Int(16)});

    auto c = candidate_sizes(10, 3, 2);
    REQUIRE(c.size() == 5);
    CHECK(c.front() == Int(81));
    CHECK(c.back() == Int(189));
    Int lo = rao_bound(10, 3, 3), hi = absolute_bound(10, 3, 2);
    for (const Int& v : c) {
        CHECK(v % 27 == 0);
        CHECK(v >= lo);
        CHECK(v <= hi);
    }
    CHECK_THROWS_AS(candidate_sizes(2, 3, 2), std::invalid_argument);
}

TEST_CASE("design polynomials vanish exactly on design degree sets") {
    auto polys = design_polynomials(Int(243), 11, 3, 2);
    REQUIRE(polys.size() == 3);
    CHECK(polys[0].is_zero());  // conditions below the degree are identities
    CHECK(polys[1].eval({Rat(6), Rat(9)}) == Rat(0));
    CHECK(polys[2].eval({Rat(6), Rat(9)}) == Rat(0));
    bool off_variety = polys[1].eval({Rat(5), Rat(9)}) != 0 ||
                       polys[2].eval({Rat(5), Rat(9)}) != 0;
    CHECK(off_variety);

    auto p81 = design_polynomials(Int(81), 10, 3, 2);
    CHECK(p81[1].eval({Rat(6), Rat(9)}) == Rat(0));
    CHECK(p81[2].eval({Rat(6), Rat(9)}) == Rat(0));
}

TEST_CASE("binary sweep routes the tight family separately") {
    SearchResult res = feasible_tuples(2, 2, 2, 4, 5);
    REQUIRE(res.main_rows.size() == 1);
    const FeasibleTuple& m = res.main_rows[0];
    CHECK(m.N == Int(16));
    CHECK(m.n == 5);
    CHECK(m.alphas == std::vector<int>{2, 4});
    CHECK_FALSE(m.tight);
    REQUIRE(m.srg.has_value());
    CHECK(m.srg->v == Int(16));
    CHECK(m.srg->k == Int(5));
    CHECK(m.srg->lambda == Int(0));
    CHECK(m.srg->mu == Int(2));
    CHECK_FALSE(m.provenance.empty());

    REQUIRE(res.hadamard_rows.size() == 1);
    const FeasibleTuple& h = res.hadamard_rows[0];
    CHECK(h.N == Int(8));
    CHECK(h.n == 4);
    CHECK(h.alphas == std::vector<int>{2, 4});
    CHECK(h.tight);
    CHECK(res.unresolved.empty());
}

TEST_CASE("ternary sweep finds the two golay-derived rows") {
    SearchResult res = feasible_tuples(2, 3, 3, 9, 11);
    REQUIRE(res.main_rows.size() == 2);
    CHECK(res.main_rows[0].N == Int(81));
    CHECK(res.main_rows[0].n == 10);
    CHECK(res.main_rows[0].alphas == std::vector<int>{6, 9});
    REQUIRE(res.main_rows[0].srg.has_value());
    CHECK(res.main_rows[0].srg->k == Int(20));
    CHECK(res.main_rows[1].N == Int(243));
    CHECK(res.main_rows[1].n == 11);
    CHECK(res.main_rows[1].alphas == std::vector<int>{6, 9});
    CHECK(res.hadamard_rows.empty());
    CHECK(res.unresolved.empty());

    SearchOptions exact;
    exact.exact_only = true;
    SearchResult res2 = feasible_tuples(2, 3, 3, 9, 11, exact);
    CHECK(render_csv(res2, 2) == render_csv(res, 2));

    SearchOptions two;
    two.jobs = 2;
    SearchResult res3 = feasible_tuples(2, 3, 3, 9, 11, two);
    CHECK(render_csv(res3, 2) == render_csv(res, 2));
}

TEST_CASE("csv and text rendering") {
    SearchResult res = feasible_tuples(2, 2, 2, 4, 5);
    std::string csv = render_csv(res, 2);
    CHECK(csv ==
          "N,n,q,alpha_1,alpha_2,v,k,lambda,mu,tight\n"
          "16,5,2,2,4,16,5,0,2,false\n");
    std::string text = render_text(res, 2);
    CHECK(text.find("# feasible parameter sets") == 0);
    CHECK(text.find("# tight hadamard-type family (s=2, q=2)") != std::string::npos);
    CHECK(text.find("8,4,2,2,4,8,1,0,0,true") != std::string::npos);
}

TEST_CASE("symmetric degree set search") {
    auto s2 = symmetric_search(2, 1, 12);
    REQUIRE(s2.size() == 3);
    for (std::size_t i = 0; i < s2.size(); ++i) {
        int n = 4 * static_cast<int>(i + 1);
        CHECK(s2[i].n == n);
        CHECK(s2[i].N == Int(2 * n));
        CHECK(s2[i].a == Int(n / 2));
        CHECK(s2[i].conditional);
    }

    auto s3 = symmetric_search(3, 1, 40);
    REQUIRE(s3.size() == 2);
    CHECK(s3[0].n == 3);
    CHECK(s3[0].N == Int(8));
    CHECK(s3[0].a == Int(1));
    CHECK(s3[1].n == 6);
    CHECK(s3[1].N == Int(32));
    CHECK(s3[1].a == Int(2));
    CHECK_FALSE(s3[1].conditional);
    CHECK(symmetric_search(3, 6, 40).size() == 1);

    auto s4 = symmetric_search(4, 1, 40);
    REQUIRE(s4.size() == 4);
    CHECK(s4[0].n == 3);
    CHECK(s4[0].N == Int(8));
    CHECK(s4[1].n == 4);
    CHECK(s4[1].N == Int(16));
    CHECK(s4[2].n == 8);
    CHECK(s4[2].N == Int(128));
    CHECK(s4[2].a == Int(2));
    CHECK(s4[3].n == 24);
    CHECK(s4[3].N == Int(4096));
    CHECK(s4[3].a == Int(8));

    CHECK_THROWS_AS(symmetric_search(5, 1, 10), std::invalid_argument);
}
