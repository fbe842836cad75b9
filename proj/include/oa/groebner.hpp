#pragma once
// Lexicographic Groebner bases over the rationals via Buchberger's
// algorithm with the product and chain criteria, plus the elimination
// helpers used by the feasible-parameter search: univariate eliminants of
// zero-dimensional ideals, a Vandermonde-quotient splitter for the
// positive-dimensional quartic case, and exact integer root scans.

#include "oa/poly.hpp"
#include "oa/rat.hpp"

#include <optional>
#include <vector>

namespace oa {

// Fully reduces f modulo the basis: no term of the result is divisible by
// any basis leading monomial.
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& basis);

// Reduced lex Groebner basis: minimal, pairwise fully reduced, monic,
// sorted by ascending leading monomial. Zero generators are dropped; the
// zero ideal yields an empty basis.
std::vector<MultiPoly> buchberger(std::vector<MultiPoly> gens);

struct EliminantResult {
    std::optional<UniPoly> eliminant;  // univariate element in the last variable
    bool unit = false;                 // ideal contains a nonzero constant
    bool zero_dimensional = false;     // every variable has a pure-power leading monomial
};

// Reads the univariate element in the last variable off a reduced lex
// basis; present exactly when the leading-monomial ideal contains a pure
// power of that variable. No eliminant and no unit means the solution set
// is not finite (or the basis is empty).
EliminantResult eliminate_univariate(const std::vector<MultiPoly>& basis);

// The basis element univariate in `var`, if any. Intended for triangular
// back-substitution where variables after `var` have been substituted away.
std::optional<UniPoly> univariate_element(const std::vector<MultiPoly>& basis, int var);

// Divides a basis element by prod_{i<j}(alpha_i - alpha_j) over exactly
// four variables and returns the quotient when it is univariate in the
// last variable; nullopt when no basis element splits that way. Throws
// unless nvars == 4.
std::optional<UniPoly> vandermonde_split(const std::vector<MultiPoly>& basis, int nvars);

// All integer roots in [lo, hi] by exact evaluation; throws on the zero
// polynomial.
std::vector<Int> integer_roots(const UniPoly& p, long lo, long hi);

}  // namespace oa
