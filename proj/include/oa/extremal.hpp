#pragma once
// Extremal machinery for dual degree sets: the F-coefficient recurrence,
// bordered falling-factorial determinants, moment identities linking the
// dual degrees x_i to the design parameters, and the distance-sum bounds.

#include "oa/codes.hpp"
#include "oa/matrix.hpp"
#include "oa/poly.hpp"
#include "oa/rat.hpp"

#include <utility>
#include <vector>

namespace oa {

struct FTable {
    std::vector<int> xs;                   // x_1 < ... < x_s, nonnegative
    std::vector<std::vector<Int>> values;  // values[k][j] = F_j^(k), 0 <= j <= k

    // F_j^(k); zero outside 0 <= j <= k.
    Int f(int k, int j) const;
    int s() const { return static_cast<int>(xs.size()); }
};

// F_0^(k) = 1 and F_j^(k) = F_j^(k-1) + (x_k - k + j) F_{j-1}^(k-1), so that
// prod_i (z - x_i) = sum_j (-1)^j F_j^(s) (z)_{s-j} with falling factorials.
FTable f_table(const std::vector<int>& xs);

// Both sides of the expansion above, as polynomials in z.
UniPoly elementary_product(const std::vector<int>& xs);
UniPoly falling_expansion(const FTable& ft);

// Bordered matrix with rows (a_i, (x_1)_i, ..., (x_s)_i) for i = 0..s.
Mat m_s_matrix(const std::vector<int>& xs, const std::vector<Rat>& as);

// Closed form (-1)^s prod_{i<j}(x_j - x_i) sum_j (-1)^j a_{s-j} F_j^(s).
Rat det_ms(const std::vector<int>& xs, const std::vector<Rat>& as);

// Moment identities of a (2s-1)-design with dual degrees xs: the returned
// residuals are zero exactly when the identities hold. Index 0 carries the
// -P_s(n) term; indices 1..s-1 are the shifted sums.
std::vector<Rat> design_identity_residuals(int n, int q, const Int& N,
                                           const std::vector<int>& xs);
std::vector<Rat> design_identity_residuals(const DistanceProfile& profile);

// Predicted F_j for j = 1..s from F_1 alone, valid for designs of strength
// at least 2s-2.
std::vector<Rat> e5_check(int n, int q, int s, const Rat& f1);

// Bounds on x_1 + ... + x_s: equality on the left characterizes x_1 = 0,
// on the right a tight 2s-design.
std::pair<Rat, Rat> e2_bounds(int n, int q, int s);

struct SumClassification {
    Rat sum, lower, upper;
    bool within = false;
    bool at_lower = false;
    bool at_upper = false;
};
SumClassification e2_classify(int n, int q, const std::vector<int>& xs);

struct PrefixVerdict {
    int m = 0;
    Int sum;         // x_1 + ... + x_m
    Int bound;       // m(m-1)
    bool ok = false;
    bool equality = false;  // holds iff x_i = 2i-2 for i <= m
};
std::vector<PrefixVerdict> e3_check(const std::vector<int>& xs);

struct MelzakReport {
    Mat rref;                    // of the moment coefficient matrix
    bool rref_matches = false;   // identity block plus the two closed-form columns
    Rat melzak1_lhs, melzak1_rhs;
    Rat melzak2_lhs, melzak2_rhs;
    bool all_ok() const {
        return rref_matches && melzak1_lhs == melzak1_rhs && melzak2_lhs == melzak2_rhs;
    }
};

// Reduces the (s-1)x(s+1) coefficient matrix of the shifted moment
// identities to row echelon form and evaluates both telescoping binomial
// sum identities exactly. Requires s >= 2 and n > s.
MelzakReport rref_a_and_melzak(int n, int q, int s);

}  // namespace oa
