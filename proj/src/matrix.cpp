#include "oa/matrix.hpp"

#include <sstream>
#include <utility>

namespace oa {

Mat Mat::identity(std::size_t m) {
    Mat r(m, m);
    for (std::size_t i = 0; i < m; ++i) r.at(i, i) = 1;
    return r;
}

Mat Mat::from_rows(std::initializer_list<std::initializer_list<Rat>> rows) {
    std::vector<std::vector<Rat>> copy;
    copy.reserve(rows.size());
    for (const auto& row : rows) copy.emplace_back(row);
    return from_rows(copy);
}

Mat Mat::from_rows(const std::vector<std::vector<Rat>>& rows) {
    std::size_t nr = rows.size();
    std::size_t nc = nr == 0 ? 0 : rows.front().size();
    Mat r(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        if (rows[i].size() != nc) throw std::invalid_argument("Mat::from_rows: ragged rows");
        for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = rows[i][j];
    }
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator-: shape mismatch");
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Mat Mat::scaled(const Rat& c) const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * c;
    return r;
}

Mat Mat::transposed() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Rat Mat::det() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat::det: matrix not square");
    const std::size_t m = rows_;
    if (m == 0) return 1;

    // Rescale each row to integers, tracking the product of the scales.
    std::vector<std::vector<Int>> a(m, std::vector<Int>(m));
    Rat scale = 1;  // det(original) = det(integer matrix) / scale
    for (std::size_t i = 0; i < m; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m; ++j) l = lcm(l, at(i, j).get_den());
        scale *= Rat(l);
        for (std::size_t j = 0; j < m; ++j) {
            Rat v = at(i, j) * Rat(l);
            a[i][j] = v.get_num();
        }
    }

    // Bareiss: a[i][j] <- (a[i][j]*a[k][k] - a[i][k]*a[k][j]) / prev, exact.
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < m; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k;
            while (piv < m && a[piv][k] == 0) ++piv;
            if (piv == m) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i) {
            for (std::size_t j = k + 1; j < m; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat d(sign * a[m - 1][m - 1]);
    return d / scale;
}

namespace {

// In-place Gauss-Jordan on `w` (rows x width), eliminating on the first
// `elim_cols` columns. Returns pivot columns.
std::vector<std::size_t> gauss_jordan(std::vector<std::vector<Rat>>& w, std::size_t elim_cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    const std::size_t nrows = w.size();
    for (std::size_t c = 0; c < elim_cols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && w[piv][c] == 0) ++piv;
        if (piv == nrows) continue;
        std::swap(w[r], w[piv]);
        const Rat inv = Rat(1) / w[r][c];
        for (auto& x : w[r]) x *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || w[i][c] == 0) continue;
            const Rat f = w[i][c];
            for (std::size_t j = c; j < w[i].size(); ++j) w[i][j] -= f * w[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Mat Mat::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("Mat::inverse: matrix not square");
    const std::size_t m = rows_;
    std::vector<std::vector<Rat>> w(m, std::vector<Rat>(2 * m));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) w[i][j] = at(i, j);
        w[i][m + i] = 1;
    }
    auto pivots = gauss_jordan(w, m);
    if (pivots.size() != m) throw std::domain_error("Mat::inverse: singular matrix");
    Mat r(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) r.at(i, j) = w[i][m + j];
    return r;
}

Mat Mat::rref(std::vector<std::size_t>* pivot_cols) const {
    std::vector<std::vector<Rat>> w(rows_, std::vector<Rat>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) w[i][j] = at(i, j);
    auto pivots = gauss_jordan(w, cols_);
    if (pivot_cols) *pivot_cols = pivots;
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = w[i][j];
    return r;
}

std::vector<std::vector<Rat>> Mat::nullspace() const {
    std::vector<std::size_t> pivots;
    Mat R = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols_);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -R.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string Mat::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << rat_to_string(at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

std::optional<AffineSolution> solve_affine(const Mat& A, const std::vector<Rat>& b) {
    if (A.rows() != b.size()) throw std::invalid_argument("solve_affine: size mismatch");
    const std::size_t n = A.cols();
    std::vector<std::vector<Rat>> w(A.rows(), std::vector<Rat>(n + 1));
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = A.at(i, j);
        w[i][n] = b[i];
    }
    auto pivots = gauss_jordan(w, n);
    // Inconsistency: a zero row with nonzero last entry.
    for (std::size_t i = pivots.size(); i < w.size(); ++i)
        if (w[i][n] != 0) return std::nullopt;

    AffineSolution sol;
    sol.particular.assign(n, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = w[r][n];
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -w[r][f];
        sol.free_cols.push_back(f);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

}  // namespace oa
