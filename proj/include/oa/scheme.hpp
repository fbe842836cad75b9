#pragma once
// Symmetric association-scheme data reconstructed from a dual eigenmatrix Q:
// the first eigenmatrix P = v*Q^{-1}, both parameter tensors, feasibility
// screening (integral nonnegative intersection numbers, nonnegative Krein
// parameters), Q-polynomial orderings, and class fusion.

#include "oa/matrix.hpp"
#include "oa/rat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace oa {

struct SchemeParams {
    int D = 0;  // number of classes
    Int v;      // number of points
    Mat Q;      // dual eigenmatrix, (D+1)x(D+1), first column all ones
    Mat P;      // first eigenmatrix, P*Q = v*I
    std::vector<Rat> p_tensor;  // intersection numbers p_{ij}^k, (D+1)^3
    std::vector<Rat> q_tensor;  // Krein parameters q_{ij}^k, (D+1)^3

    const Rat& p(int i, int j, int k) const;
    const Rat& q(int i, int j, int k) const;
    Rat valency(int i) const { return P.at(0, i); }
    Rat multiplicity(int i) const { return Q.at(0, i); }
};

// Builds the scheme parameters from Q and the point count. Throws
// std::invalid_argument when Q is not square, its first column is not
// all ones, or it is singular.
SchemeParams scheme_from_Q(const Mat& Q, const Int& v);

struct FeasibilityReport {
    bool feasible = true;
    std::vector<std::string> violations;
};

// Checks that every p_{ij}^k is a nonnegative integer and every q_{ij}^k
// is nonnegative; records one violation line per failing entry.
FeasibilityReport feasibility_report(const SchemeParams& sp);

struct QPolyOrdering {
    std::vector<int> order;  // relabelling sigma(0)=0, sigma(1..D)
    Mat l1star;              // (q*_{1j})^k in the new labels, rows k, cols j
    std::vector<Rat> krein_a;  // a*_i = L1*[i][i],   i = 0..D
    std::vector<Rat> krein_b;  // b*_i = L1*[i][i+1], i = 0..D-1
    std::vector<Rat> krein_c;  // c*_i = L1*[i][i-1], i = 1..D
    bool q_antipodal = false;  // b*_i = c*_{D-i} for all i != floor(D/2)
};

// All relabellings of the nontrivial classes making L1* an irreducible
// tridiagonal matrix (positive super- and subdiagonal).
std::vector<QPolyOrdering> qpoly_orderings(const SchemeParams& sp);

std::string krein_array_string(const QPolyOrdering& ord);

struct SrgParams {
    Int v, k, lambda, mu;
};

// Strongly regular graph parameters of the smaller-valency relation of a
// 2-class scheme; nullopt when D != 2 or the parameters are not integers.
std::optional<SrgParams> srg_params(const SchemeParams& sp);

// Sums the columns of an eigenmatrix over each part of a partition of the
// column indices, then removes duplicate rows (first occurrence kept).
Mat fuse_scheme(const Mat& P, const std::vector<std::vector<int>>& partition);

}  // namespace oa
