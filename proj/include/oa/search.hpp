#pragma once
// Feasible-parameter search: enumerate candidate design sizes N by the
// q^(2s-1) divisibility step, solve the polynomial design equations for the
// degree set by lexicographic elimination, and validate every solution on
// the exact scheme pipeline. A sound modular prefilter (reduction mod a
// word-size prime) discards most candidates cheaply; anything it cannot
// certify falls back to exact arithmetic, and cases the exact pipeline
// cannot resolve are surfaced, never dropped.

#include "oa/poly.hpp"
#include "oa/rat.hpp"
#include "oa/scheme.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oa {

// All N in [rao_bound(n,q,2s-1), absolute_bound(n,q,s)] divisible by
// q^(2s-1). Requires n > s.
std::vector<Int> candidate_sizes(int n, int q, int s);

// The design equations cleared of denominators: p_i is det(Q) times the
// i-th strength condition on the reconstructed distance distribution,
// polynomial in the degree set variables. p_1..p_{s-1} vanish identically;
// the ideal of p_s..p_{2s-1} cuts out the feasible degree sets.
std::vector<MultiPoly> design_polynomials(const Int& N, int n, int q, int s);

struct FeasibleTuple {
    Int N;
    int n = 0, q = 0;
    std::vector<int> alphas;
    bool tight = false;                   // N meets the odd Rao bound
    std::optional<SrgParams> srg;         // populated for s = 2
    std::vector<std::string> provenance;  // validation steps that passed
};

struct SearchOptions {
    int jobs = 0;             // 0: OA_SCHEME_JOBS env var, then hardware width
    bool exact_only = false;  // bypass the modular prefilter
};

struct SearchResult {
    std::vector<FeasibleTuple> main_rows;      // canonical (q, n, N) order
    std::vector<FeasibleTuple> hadamard_rows;  // tight s=2, q=2 family
    std::vector<std::string> unresolved;       // candidates needing attention
};

SearchResult feasible_tuples(int s, int q_min, int q_max, int n_min, int n_max,
                             const SearchOptions& opts = {});

// CSV rendering of the main section with a header row; for s = 2 the SRG
// quadruple columns sit between the alphas and the tight flag.
std::string render_csv(const SearchResult& res, int s);
// Text rendering of all sections.
std::string render_text(const SearchResult& res, int s);

struct SymmetricRow {
    int n = 0;
    Int N;
    Int a;
    bool conditional = false;  // s=2 existence depends on a Hadamard matrix
};

// Closed-form solutions of the symmetric degree-set equations over q = 2:
// s=2 admits every n divisible by four; s=3 and s=4 reduce to integer
// square-root and integrality filters on (N, a).
std::vector<SymmetricRow> symmetric_search(int s, int n_min, int n_max);

}  // namespace oa
