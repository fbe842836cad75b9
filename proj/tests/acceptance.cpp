// Acceptance gate: one PASS/FAIL line per numbered criterion, details on
// failure. Integer arguments restrict the run to the listed criteria.
// Exit status 0 iff every selected criterion passes.

#include "oa/codes.hpp"
#include "oa/delsarte.hpp"
#include "oa/design.hpp"
#include "oa/extremal.hpp"
#include "oa/krawtchouk.hpp"
#include "oa/scheme.hpp"
#include "oa/search.hpp"
#include "oa/triples.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace oa;

namespace {

struct Log {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        detail << "  " << what << "\n";
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void log_diff(Log& lg, const std::string& got, const std::string& want) {
    std::istringstream g(got), w(want);
    std::string gl, wl;
    int line = 0, shown = 0;
    while (shown < 8) {
        bool hg = static_cast<bool>(std::getline(g, gl));
        bool hw = static_cast<bool>(std::getline(w, wl));
        if (!hg && !hw) break;
        ++line;
        if (!hg) gl = "<eof>";
        if (!hw) wl = "<eof>";
        if (gl != wl) {
            lg.detail << "    line " << line << ": got '" << gl << "' want '" << wl << "'\n";
            ++shown;
        }
    }
}

Mat int_mat(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rat>> rs;
    rs.reserve(rows.size());
    for (const auto& r : rows) {
        std::vector<Rat> row;
        row.reserve(r.size());
        for (long x : r) row.emplace_back(static_cast<long int>(x));
        rs.push_back(std::move(row));
    }
    return Mat::from_rows(rs);
}

Mat hamming_Q(int n, int q) {
    std::vector<std::vector<Rat>> rows(n + 1, std::vector<Rat>(n + 1));
    for (int x = 0; x <= n; ++x)
        for (int j = 0; j <= n; ++j) rows[x][j] = Rat(kraw_eval(n, q, j, x));
    return Mat::from_rows(rows);
}

struct TableRow {
    Int N;
    int n = 0, q = 0;
    std::vector<int> alphas;
    bool tight = false;
};

std::vector<TableRow> parse_table(const std::string& path, int s) {
    std::istringstream in(read_file(path));
    std::vector<TableRow> rows;
    std::string line;
    std::getline(in, line);  // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<std::string> fields;
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        TableRow row;
        row.N = Int(fields.at(0));
        row.n = std::stoi(fields.at(1));
        row.q = std::stoi(fields.at(2));
        for (int i = 0; i < s; ++i) row.alphas.push_back(std::stoi(fields.at(3 + i)));
        row.tight = fields.back() == "true";
        rows.push_back(std::move(row));
    }
    return rows;
}

// --- criterion 1: the search reproduces the golden tables -----------------

void criterion1(Log& lg) {
    struct Sweep {
        int s, q_max, n_max;
        const char* file;
    };
    const Sweep sweeps[] = {{2, 6, 300, "/table1.csv"},
                            {3, 10, 200, "/table2.csv"},
                            {4, 10, 100, "/table3.csv"}};
    for (const auto& sw : sweeps) {
        SearchResult res = feasible_tuples(sw.s, 2, sw.q_max, 2, sw.n_max);
        std::string got = render_csv(res, sw.s);
        std::string want = read_file(std::string(OA_TEST_DATA_DIR) + sw.file);
        lg.expect(got == want, "main table mismatch for s=" + std::to_string(sw.s));
        if (got != want) log_diff(lg, got, want);
        lg.expect(res.unresolved.empty(),
                  "unresolved candidates in sweep s=" + std::to_string(sw.s));
        for (const auto& u : res.unresolved) lg.detail << "    " << u << "\n";
        if (sw.s == 2) {
            lg.expect(!res.hadamard_rows.empty(), "hadamard-type family came out empty");
            for (const auto& row : res.hadamard_rows) {
                bool shape = row.q == 2 && row.n % 4 == 0 && row.N == Int(2 * row.n) &&
                             row.alphas == std::vector<int>{row.n / 2, row.n} && row.tight;
                lg.expect(shape,
                          "hadamard-type row out of shape at n=" + std::to_string(row.n));
            }
        }
    }
}

// --- criterion 2: tight 3-design family obstructions ----------------------

void criterion2(Log& lg) {
    const std::set<int> rejected = {3, 6, 7, 10, 11};
    for (int q = 3; q <= 12; ++q) {
        Tight3Result res = tight3_pipeline(q);
        Verdict want = rejected.count(q) ? Verdict::Infeasible : Verdict::Feasible;
        lg.expect(res.verdict == want, "tight3 verdict wrong at q=" + std::to_string(q) +
                                           " (" + to_string(res.verdict) + ")");

        DesignParams dp;
        dp.N = int_pow(Int(q), 3);
        dp.n = q + 2;
        dp.q = q;
        dp.alphas = {q, q + 2};
        dp.t = 3;
        SchemeParams sp = fission_scheme(dp);
        Rat p222 = make_rat(Int(q) * (q + 3) * (q - 2), Int(4));
        lg.expect(sp.p(2, 2, 2) == p222,
                  "p_{2,2}^2 closed form fails at q=" + std::to_string(q));

        TripleSystem ts = triple_system(sp, 2, 2, 2);
        TripleSolution sol = solve_triples(ts);
        size_t idx = triple_index(sp.D, 1, 2, 3);
        bool pinned = sol.consistent && pinned_coordinate(sol, idx);
        lg.expect(pinned, "[1 2 3] not pinned at base (2,2,2) at q=" + std::to_string(q));
        if (pinned) {
            lg.expect(sol.aff.particular[idx] == make_rat(Int(q) * (q - 1), Int(4)),
                      "[1 2 3] closed form fails at q=" + std::to_string(q));
        }
    }
}

// --- criterion 3: builtin code profiles -----------------------------------

void criterion3(Log& lg) {
    struct CodePin {
        const char* name;
        int n, q, t;
        long N;
        std::vector<int> S;
        TightnessClass tc;
    };
    const std::vector<CodePin> pins = {
        {"repetition-dual(6)", 6, 2, 5, 32, {2, 4, 6}, TightnessClass::TightOdd},
        {"golay-ternary-dual", 11, 3, 4, 243, {6, 9}, TightnessClass::TightEven},
        {"golay-ternary-ext", 12, 3, 5, 729, {6, 9, 12}, TightnessClass::TightOdd},
        {"golay-binary-dual", 23, 2, 6, 2048, {8, 12, 16}, TightnessClass::TightEven},
        {"golay-binary-ext", 24, 2, 7, 4096, {8, 12, 16, 24}, TightnessClass::TightOdd},
        {"hyperoval-oa(4)", 6, 4, 3, 64, {4, 6}, TightnessClass::TightOdd},
    };
    for (const auto& pin : pins) {
        DistanceProfile p = distance_profile(builtin_code(pin.name));
        lg.expect(p.n == pin.n && p.q == pin.q && p.N == Int(pin.N),
                  std::string(pin.name) + ": size triple mismatch");
        lg.expect(p.strength == pin.t, std::string(pin.name) + ": strength mismatch");
        lg.expect(p.degree_set == pin.S, std::string(pin.name) + ": degree set mismatch");
        lg.expect(p.tightness == pin.tc, std::string(pin.name) + ": tightness mismatch");
    }

    DesignParams dp;
    dp.N = 64;
    dp.n = 6;
    dp.q = 4;
    dp.alphas = {4, 6};
    dp.t = 3;
    auto srg = srg_params(delsarte_scheme(dp));
    lg.expect(srg.has_value() && srg->v == 64 && srg->k == 18 && srg->lambda == 2 &&
                  srg->mu == 6,
              "hyperoval srg parameters wrong");
}

// --- criterion 4: distance-sum equality cases -----------------------------

void criterion4(Log& lg) {
    DistanceProfile ext = distance_profile(builtin_code("golay-ternary-ext"));
    SumClassification lo = e2_classify(ext.n, ext.q, ext.dual_degrees);
    lg.expect(lo.within && lo.at_lower && lo.sum == Rat(9),
              "extended ternary golay should meet the lower bound at 9");
    lg.expect(!ext.dual_degrees.empty() && ext.dual_degrees.front() == 0,
              "lower-bound equality should come with x_1 = 0");

    DistanceProfile dual = distance_profile(builtin_code("golay-ternary-dual"));
    SumClassification hi = e2_classify(dual.n, dual.q, dual.dual_degrees);
    lg.expect(hi.within && hi.at_upper && hi.sum == Rat(7),
              "dual ternary golay should meet the upper bound at 7");
    lg.expect(dual.tightness == TightnessClass::TightEven,
              "upper-bound equality should mean a tight even-strength design");
}

// --- criterion 5: eigenmatrix identities and closed forms ------------------

void criterion5(Log& lg) {
    std::vector<SchemeParams> schemes;
    for (int q : {2, 3})
        for (int n = 2; n <= 5; ++n)
            schemes.push_back(
                scheme_from_Q(hamming_Q(n, q), int_pow(Int(q), static_cast<unsigned long>(n))));
    DesignParams d1;
    d1.N = 243;
    d1.n = 11;
    d1.q = 3;
    d1.alphas = {6, 9};
    d1.t = 4;
    schemes.push_back(delsarte_scheme(d1));
    DesignParams d2;
    d2.N = 16;
    d2.n = 5;
    d2.q = 2;
    d2.alphas = {2, 4};
    d2.t = 3;
    schemes.push_back(fission_scheme(d2));
    DesignParams d3;
    d3.N = 729;
    d3.n = 12;
    d3.q = 3;
    d3.alphas = {6, 9, 12};
    d3.t = 5;
    schemes.push_back(fission_scheme(d3));
    for (size_t i = 0; i < schemes.size(); ++i) {
        const auto& sp = schemes[i];
        Mat prod = sp.P * sp.Q;
        lg.expect(prod == Mat::identity(prod.rows()).scaled(Rat(sp.v)),
                  "P*Q != v*I for constructed scheme #" + std::to_string(i));
    }

    for (long q : {2L, 4L, 8L}) {
        DesignParams dp;
        dp.N = int_pow(Int(q), 3);
        dp.n = static_cast<int>(q) + 2;
        dp.q = static_cast<int>(q);
        dp.alphas = {static_cast<int>(q), static_cast<int>(q) + 2};
        dp.t = 3;
        Mat want = int_mat({{1, q * q - 1, (q - 1) * (q - 1) * (q + 1), q - 1},
                            {1, -1, 1 - q, q - 1},
                            {1, q - 1, 1 - q, -1},
                            {1, -q - 1, q + 1, -1}});
        lg.expect(fission_Q_matrix(dp) == want,
                  "tight-family Q closed form fails at q=" + std::to_string(q));

        SchemeParams sp = fission_scheme(dp);
        std::ostringstream ks;
        ks << "{" << q * q - 1 << ", " << (q - 1) * q << ", 1; 1, " << q << ", " << q * q - 1
           << "}";
        bool found = false;
        for (const auto& ord : qpoly_orderings(sp))
            if (krein_array_string(ord) == ks.str() && ord.q_antipodal) found = true;
        lg.expect(found, "Krein array closed form fails at q=" + std::to_string(q));
    }

    for (long q : {2L, 3L, 4L, 5L}) {
        long q2 = q * q;
        DesignParams dp;
        dp.N = int_pow(Int(q), 4);
        dp.n = static_cast<int>(q2) + 1;
        dp.q = static_cast<int>(q);
        dp.alphas = {static_cast<int>(q2 - q), static_cast<int>(q2)};
        dp.t = 3;
        SchemeParams sp = fission_scheme(dp);
        Mat wantQ = int_mat({{1, (q - 1) * q2, q * (q2 - 1), (q - 1) * (q - 1) * q2, q - 1},
                             {1, 0, -q, 0, q - 1},
                             {1, -q2, q * (q2 - 1), -(q - 1) * q2, q - 1},
                             {1, q, 0, -q, -1},
                             {1, -(q - 1) * q, 0, (q - 1) * q, -1}});
        Mat wantP = int_mat({{1, q * (q2 - 1), q - 1, (q - 1) * (q - 1) * q2, (q - 1) * q2},
                             {1, 0, -1, (q - 1) * q, -(q - 1) * q},
                             {1, -q, q - 1, 0, 0},
                             {1, 0, -1, -q, q},
                             {1, q * (q2 - 1), q - 1, -(q - 1) * q2, -q2}});
        lg.expect(sp.Q == wantQ, "one-parameter family Q fails at q=" + std::to_string(q));
        lg.expect(sp.P == wantP, "one-parameter family P fails at q=" + std::to_string(q));
    }
}

// --- criterion 6: determinant closed forms vs brute force ------------------

void criterion6(Log& lg) {
    std::mt19937 rng(20260814u);
    std::uniform_int_distribution<int> qd(2, 9), step(1, 5), start(0, 3), pad(1, 4);

    for (int s = 1; s <= 4; ++s) {
        for (int it = 0; it < 200; ++it) {
            int q = qd(rng);
            std::vector<int> alphas;
            int cur = start(rng);
            for (int i = 0; i < s; ++i) {
                alphas.push_back(cur);
                cur += step(rng);
            }
            int len = alphas.back() + pad(rng);
            if (cg_value(q, alphas) != m_matrix(len, q, alphas).det()) {
                lg.expect(false, "degree-set determinant closed form fails (s=" +
                                     std::to_string(s) + ")");
                return;
            }
        }
    }

    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int s = 1; s <= 4; ++s) {
        for (int it = 0; it < 200; ++it) {
            std::vector<int> xs;
            int cur = start(rng);
            std::vector<Rat> as;
            for (int i = 0; i < s; ++i) {
                xs.push_back(cur);
                cur += step(rng);
            }
            for (int i = 0; i <= s; ++i) as.emplace_back(coeff(rng));
            if (det_ms(xs, as) != m_s_matrix(xs, as).det()) {
                lg.expect(false, "bordered determinant closed form fails (s=" +
                                     std::to_string(s) + ")");
                return;
            }
        }
    }

    // refined-scheme determinant, nontight branch: valid for any formal input
    for (int s = 2; s <= 4; ++s) {
        std::uniform_int_distribution<int> qd2(2, 5);
        for (int it = 0; it < 200; ++it) {
            DesignParams dp;
            dp.q = qd2(rng);
            std::vector<int> alphas;
            int cur = 1 + start(rng);
            for (int i = 0; i < s; ++i) {
                alphas.push_back(cur);
                cur += step(rng);
            }
            dp.alphas = alphas;
            dp.n = std::max(alphas.back() + pad(rng) % 2, 2 * s - 1);
            dp.t = 2 * s - 1;
            Int lo = rao_bound(dp.n, dp.q, dp.t);
            Int hi = absolute_bound(dp.n, dp.q, s);
            if (hi <= lo) continue;  // no nontight size fits this degree set
            dp.N = lo + 1 + Int(it) % (hi - lo);  // anything strictly above the bound
            Rat got = fission_Q_matrix(dp).det();
            Rat want = det_fission_Q(dp);
            if (got != want && -got != want) {
                lg.expect(false, "refined-scheme determinant fails (nontight, s=" +
                                     std::to_string(s) + ")");
                return;
            }
        }
    }

    // tight branch on genuine tight parameter sets
    std::vector<DesignParams> tights;
    for (int q = 2; q <= 9; ++q) {
        DesignParams dp;
        dp.N = int_pow(Int(q), 3);
        dp.n = q + 2;
        dp.q = q;
        dp.alphas = {q, q + 2};
        dp.t = 3;
        tights.push_back(dp);
    }
    for (int n = 4; n <= 20; n += 4) {
        DesignParams dp;
        dp.N = 2 * n;
        dp.n = n;
        dp.q = 2;
        dp.alphas = {n / 2, n};
        dp.t = 3;
        tights.push_back(dp);
    }
    const std::vector<std::tuple<long, int, int, std::vector<int>>> named = {
        {32, 6, 2, {2, 4, 6}},
        {729, 12, 3, {6, 9, 12}},
        {128, 8, 2, {2, 4, 6, 8}},
        {4096, 24, 2, {8, 12, 16, 24}},
    };
    for (const auto& [N, n, q, alphas] : named) {
        DesignParams dp;
        dp.N = N;
        dp.n = n;
        dp.q = q;
        dp.alphas = alphas;
        dp.t = 2 * static_cast<int>(alphas.size()) - 1;
        tights.push_back(dp);
    }
    for (const auto& dp : tights) {
        lg.expect(dp.N == rao_bound(dp.n, dp.q, dp.t), "tight sample is not actually tight");
        Rat got = fission_Q_matrix(dp).det();
        Rat want = det_fission_Q(dp);
        lg.expect(got == want || -got == want,
                  "refined-scheme determinant fails (tight, n=" + std::to_string(dp.n) +
                      ", q=" + std::to_string(dp.q) + ")");
    }
}

// --- criterion 7: moment identity suites -----------------------------------

void criterion7(Log& lg) {
    std::mt19937 rng(777u);
    std::uniform_int_distribution<int> step(1, 4), start(0, 2);
    for (int it = 0; it < 200; ++it) {
        int s = 1 + it % 6;
        std::vector<int> xs;
        int cur = start(rng);
        for (int i = 0; i < s; ++i) {
            xs.push_back(cur);
            cur += step(rng);
        }
        if (elementary_product(xs) != falling_expansion(f_table(xs))) {
            lg.expect(false, "falling-factorial expansion fails (s=" + std::to_string(s) + ")");
            break;
        }
    }

    const std::vector<const char*> extremal_builtins = {
        "repetition-dual(6)", "golay-ternary-dual", "golay-ternary-ext",
        "golay-binary-dual",  "golay-binary-ext",   "hadamard(8)",
        "hyperoval-oa(4)"};
    for (const char* name : extremal_builtins) {
        DistanceProfile p = distance_profile(builtin_code(name));
        bool zero = true;
        for (const Rat& r : design_identity_residuals(p)) zero = zero && r == 0;
        lg.expect(zero, std::string("identity residuals nonzero for ") + name);
    }

    lg.expect(e5_check(11, 3, 2, Rat(6)) == std::vector<Rat>{Rat(6), Rat(10)},
              "coefficient prediction fails for (11,3,2)");
    lg.expect(e5_check(12, 3, 3, Rat(6)) == std::vector<Rat>{Rat(6), Rat(10), Rat(0)},
              "coefficient prediction fails for (12,3,3)");
    lg.expect(e5_check(6, 2, 3, Rat(3)) == std::vector<Rat>{Rat(3), Rat(3), Rat(0)},
              "coefficient prediction fails for (6,2,3)");
    // predictions agree with the coefficient tables of genuine dual degree sets
    const std::vector<std::pair<const char*, int>> predictable = {
        {"golay-ternary-dual", 2}, {"golay-ternary-ext", 3}, {"repetition-dual(6)", 3}};
    for (const auto& [name, s] : predictable) {
        DistanceProfile p = distance_profile(builtin_code(name));
        FTable ft = f_table(p.dual_degrees);
        auto preds = e5_check(p.n, p.q, s, Rat(ft.f(s, 1)));
        bool match = static_cast<int>(preds.size()) == s;
        for (int j = 1; j <= s && match; ++j) match = preds[j - 1] == Rat(ft.f(s, j));
        lg.expect(match, std::string("predictions disagree with the table for ") + name);
    }

    for (int s = 2; s <= 5; ++s)
        for (int q = 2; q <= 9; ++q)
            for (int n = s + 1; n <= 50; ++n) {
                MelzakReport mr = rref_a_and_melzak(n, q, s);
                if (!mr.all_ok()) {
                    lg.expect(false, "summation identities fail at (n,q,s)=(" +
                                         std::to_string(n) + "," + std::to_string(q) + "," +
                                         std::to_string(s) + ")");
                    return;
                }
            }
}

// --- criterion 8: divisibility obstructions --------------------------------

void criterion8(Log& lg) {
    const std::vector<std::pair<const char*, int>> tables = {
        {"/table1.csv", 2}, {"/table2.csv", 3}, {"/table3.csv", 4}};
    for (const auto& [file, s] : tables) {
        for (const auto& row : parse_table(std::string(OA_TEST_DATA_DIR) + file, s)) {
            DesignParams dp;
            dp.N = row.N;
            dp.n = row.n;
            dp.q = row.q;
            dp.alphas = row.alphas;
            dp.t = 2 * s - 1;
            DivisibilityReport rep = divisibility_tests(dp);
            lg.expect(rep.cg_integral && rep.cg_divides,
                      "degree-bound divisibility fails at N=" + row.N.get_str() +
                          ", n=" + std::to_string(row.n) + ", q=" + std::to_string(row.q));
            lg.expect(rep.all_pass(), "refined divisibility fails at N=" + row.N.get_str() +
                                          ", n=" + std::to_string(row.n) +
                                          ", q=" + std::to_string(row.q));
        }
    }

    DesignParams p16;
    p16.N = 16;
    p16.n = 5;
    p16.q = 2;
    p16.alphas = {2, 4};
    p16.t = 3;
    DivisibilityReport rep = divisibility_tests(p16);
    lg.expect(rep.fission_value == Rat(64) && rep.fission_divides,
              "refined determinant value should be 64 and divide 16^4");
    Rat det = fission_Q_matrix(p16).det();
    lg.expect(det == Rat(1024) || det == Rat(-1024),
              "refined eigenmatrix determinant should be +-1024");

    DesignParams bad;
    bad.N = 243;
    bad.n = 11;
    bad.q = 3;
    bad.alphas = {6, 10};
    bad.t = 3;
    lg.expect(!divisibility_tests(bad).all_pass(), "perturbed degree set went undetected");
}

// --- criterion 9: contraction chain ----------------------------------------

void criterion9(Log& lg) {
    Code c6 = builtin_code("repetition-dual(6)");
    DistanceProfile p6 = distance_profile(c6);
    lg.expect(p6.strength == 5 && p6.tightness == TightnessClass::TightOdd,
              "starting code is not a tight strength-5 design");

    Code c5 = contraction(c6, 0, 0);
    DistanceProfile p5 = distance_profile(c5);
    lg.expect(p5.N == Int(16) && p5.n == 5 && p5.q == 2, "first contraction size wrong");
    lg.expect(p5.strength == 4 && p5.tightness == TightnessClass::TightEven,
              "first contraction should be a tight strength-4 design");
    lg.expect(p5.degree_set == std::vector<int>{2, 4}, "first contraction degree set wrong");

    Code c4 = contraction(c5, 0, 0);
    DistanceProfile p4 = distance_profile(c4);
    lg.expect(p4.N == Int(8) && p4.n == 4 && p4.q == 2, "second contraction size wrong");
    lg.expect(p4.strength == 3 && p4.tightness == TightnessClass::TightOdd,
              "second contraction should be a tight strength-3 design");
}

// --- criterion 10: symmetric design characterizations -----------------------

void criterion10(Log& lg) {
    auto s3 = symmetric_search(3, 6, 200);
    lg.expect(s3.size() == 1 && s3[0].n == 6 && s3[0].N == Int(32) && s3[0].a == Int(2),
              "degree-3 characterization should yield exactly (6,32,2)");

    auto s4 = symmetric_search(4, 8, 200);
    lg.expect(s4.size() == 2, "degree-4 characterization should yield two rows");
    if (s4.size() == 2) {
        lg.expect(s4[0].n == 8 && s4[0].N == Int(128) && s4[0].a == Int(2),
                  "first degree-4 row should be (8,128,2)");
        lg.expect(s4[1].n == 24 && s4[1].N == Int(4096) && s4[1].a == Int(8),
                  "second degree-4 row should be (24,4096,8)");
    }

    // square lengths beyond the allowed residues must be filtered out
    auto s3all = symmetric_search(3, 1, 200);
    lg.expect(s3all.size() == 2 && s3all[0].n == 3 && s3all[1].n == 6,
              "degree-3 integrality filter admits extra lengths");
    auto s4all = symmetric_search(4, 1, 200);
    lg.expect(s4all.size() == 4 && s4all[0].n == 3 && s4all[1].n == 4 && s4all[2].n == 8 &&
                  s4all[3].n == 24,
              "degree-4 integrality filter admits extra lengths");

    auto s2 = symmetric_search(2, 1, 20);
    bool ok2 = s2.size() == 5;
    for (size_t i = 0; ok2 && i < s2.size(); ++i) {
        int n = 4 * static_cast<int>(i + 1);
        ok2 = s2[i].n == n && s2[i].N == Int(2 * n) && s2[i].a == Int(n / 2) &&
              s2[i].conditional;
    }
    lg.expect(ok2, "degree-2 rows should be every multiple of four, conditional");
}

}  // namespace

int main(int argc, char** argv) {
    struct Criterion {
        int id;
        const char* label;
        void (*fn)(Log&);
    };
    const std::vector<Criterion> criteria = {
        {1, "parameter search reproduces the golden tables", criterion1},
        {2, "tight 3-design family obstructions", criterion2},
        {3, "builtin code profiles", criterion3},
        {4, "distance-sum equality cases", criterion4},
        {5, "eigenmatrix identities and closed forms", criterion5},
        {6, "determinant closed forms vs brute force", criterion6},
        {7, "moment identity suites", criterion7},
        {8, "divisibility obstructions", criterion8},
        {9, "contraction chain", criterion9},
        {10, "symmetric design characterizations", criterion10},
    };

    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : criteria) {
        if (!wanted.empty() && !wanted.count(c.id)) continue;
        Log lg;
        try {
            c.fn(lg);
        } catch (const std::exception& e) {
            lg.ok = false;
            lg.detail << "  exception: " << e.what() << "\n";
        }
        std::cout << "criterion " << c.id << ": " << (lg.ok ? "PASS" : "FAIL") << " - "
                  << c.label << "\n";
        if (!lg.ok) {
            std::cout << lg.detail.str();
            ++failures;
        }
        std::cout.flush();
    }
    return failures == 0 ? 0 : 1;
}
