#pragma once
// Dense matrices of exact rationals. Determinants use fraction-free Bareiss
// elimination on an integer-rescaled copy; inverses, reduced row echelon
// forms, kernels and affine solves use exact Gauss-Jordan elimination.

#include "oa/rat.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace oa {

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Mat identity(std::size_t m);
    static Mat from_rows(std::initializer_list<std::initializer_list<Rat>> rows);
    static Mat from_rows(const std::vector<std::vector<Rat>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

    Mat operator*(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Rat& c) const;
    Mat transposed() const;

    // Exact determinant (throws std::invalid_argument unless square).
    Rat det() const;

    // Exact inverse (throws std::domain_error when singular).
    Mat inverse() const;

    // The unique reduced row echelon form; optionally reports pivot columns.
    Mat rref(std::vector<std::size_t>* pivot_cols = nullptr) const;

    // Basis of the right kernel {x : A x = 0}.
    std::vector<std::vector<Rat>> nullspace() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

// All rational solutions of A x = b as particular + kernel basis; nullopt when
// the system is inconsistent. Free variables are set to zero in `particular`;
// `free_cols` lists their column indices, aligned with `kernel`.
struct AffineSolution {
    std::vector<Rat> particular;
    std::vector<std::vector<Rat>> kernel;
    std::vector<std::size_t> free_cols;
};
std::optional<AffineSolution> solve_affine(const Mat& A, const std::vector<Rat>& b);

}  // namespace oa
