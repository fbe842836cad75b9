#pragma once
// Eigenmatrices induced by a design's distance relations: the s-class scheme
// of a design with strength t >= 2s-2, the refined scheme obtained from the
// q contractions of a (2s-1)-design (2s classes when tight, 2s+1 otherwise),
// determinant closed forms, and the divisibility obstructions they imply.

#include "oa/design.hpp"
#include "oa/matrix.hpp"
#include "oa/poly.hpp"
#include "oa/scheme.hpp"

#include <vector>

namespace oa {

// s x s matrix with entries K_{len,q,j}(x_i), columns j = 0..s-1.
// Throws when some x_i lies outside [0, len].
Mat m_matrix(int len, int q, const std::vector<int>& xs);

// (s+1) x (s+1) second eigenmatrix of the s-class scheme: rows indexed by
// 0, alpha_1..alpha_s; columns K_0..K_{s-1} plus the complementary-sum
// column. Requires t >= 2s-2.
Mat delsarte_Q_matrix(const DesignParams& dp);
SchemeParams delsarte_scheme(const DesignParams& dp);

// Second eigenmatrix of the contraction-refined scheme of a (2s-1)-design.
// Tight: 2s x 2s with top rows 0, alpha_1..alpha_{s-1} and bottom rows
// alpha_i - 1; requires alpha_s = n. Nontight: (2s+1) x (2s+1) with top
// rows 0, alpha_1..alpha_s and a complementary-sum middle column that is
// zero on the bottom rows. Both use length-(n-1) Krawtchouk columns, with
// the second block carrying degrees s-1 down to 0.
Mat fission_Q_matrix(const DesignParams& dp);
SchemeParams fission_scheme(const DesignParams& dp);

// q^{s(s-1)/2} prod_{i<j}(alpha_i - alpha_j) / prod_{i=1}^{s-1} i!
// Equals det(m_matrix) for any length parameter; an integer for integer
// alphas (zero when two entries coincide).
Rat cg_value(int q, const std::vector<int>& alphas);

// |det| of fission_Q_matrix without building it:
//   nontight: N * q^s * cg^2
//   tight:    N * q^{s-1} * |cg(alphas) * cg(alphas without alpha_s)|
Rat det_fission_Q(const DesignParams& dp);

struct DivisibilityReport {
    Rat cg;               // degree-bound determinant value (signed)
    bool cg_integral = false;
    bool cg_divides = false;   // |cg| divides N^s
    bool tight = false;        // at strength 2s-1
    Rat fission_value;         // q^s cg^2, or q^s T^2 in the tight case
    bool fission_integral = false;
    bool fission_divides = false;  // divides N^{2s}, or N^{2s-1} when tight
    bool all_pass() const { return cg_integral && cg_divides && fission_integral && fission_divides; }
};

DivisibilityReport divisibility_tests(const DesignParams& dp);

// Tight even-strength designs satisfy N * prod_i (1 - x/alpha_i) =
// sum_{j=0}^{s} K_{n,q,j}(x) as polynomials in x.
bool wilson_even_identity(const DesignParams& dp);

}  // namespace oa
