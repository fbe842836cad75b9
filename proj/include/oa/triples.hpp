#pragma once
// Triple intersection numbers [r s t] of a parameter-level scheme relative
// to a base triple of vertices in relations (A,B,C): marginal equations from
// double counting plus one linear equation per vanishing Krein parameter.
// Feasibility asks for a nonnegative integer point of the affine solution set.

#include "oa/matrix.hpp"
#include "oa/rat.hpp"
#include "oa/scheme.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oa {

// Flattened index of [r s t] for 1 <= r,s,t <= D.
size_t triple_index(int D, int r, int s, int t);

struct TripleSystem {
    SchemeParams scheme;
    int A = 0, B = 0, C = 0;  // rel(u,v), rel(u,w), rel(v,w)
    Mat coeffs;               // equations x D^3 unknowns
    std::vector<Rat> rhs;
};

// Throws std::invalid_argument unless 1 <= A,B,C <= D and p_{BC}^A > 0.
TripleSystem triple_system(const SchemeParams& sp, int A, int B, int C);

struct TripleSolution {
    bool consistent = false;
    AffineSolution aff;  // valid when consistent; kernel empty <=> unique
};

TripleSolution solve_triples(const TripleSystem& ts);

// True when every kernel vector vanishes at the coordinate, so it takes a
// single value on the whole solution set. Requires a consistent solution.
bool pinned_coordinate(const TripleSolution& sol, size_t idx);

enum class Verdict { Feasible, Infeasible, Unknown };

std::string to_string(Verdict v);

struct TripleWitness {
    int A = 0, B = 0, C = 0;
    int r = 0, s = 0, t = 0;
    Rat value;  // offending pinned coordinate, negative or non-integral
};

struct TripleReport {
    Verdict verdict = Verdict::Feasible;
    std::optional<TripleWitness> witness;
    std::vector<std::string> notes;  // inconsistent or unresolved base triples
};

// Solves every admissible base triple with A <= B <= C (the other orders
// follow by permuting the roles of the three base vertices). Unique
// solutions are checked directly; underdetermined ones are searched over
// the free coordinates within their marginal caps, up to a combination
// budget beyond which the triple is reported unresolved.
TripleReport triple_feasible(const SchemeParams& sp);

struct Tight3Result {
    int q = 0;
    Verdict verdict = Verdict::Feasible;
    std::string detail;  // obstruction witness or summary
};

// Full pipeline for the one-parameter tight family (q^3, q+2, q, {q, q+2}):
// build the refined scheme, screen the corner intersection number p_{2,2}^2,
// then check the pinned coordinates of the (2,2,2) triple system.
Tight3Result tight3_pipeline(int q);

}  // namespace oa
