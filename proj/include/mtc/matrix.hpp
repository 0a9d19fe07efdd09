#ifndef MTC_MATRIX_HPP
#define MTC_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mtc {

// Dense matrix over an exact field (Rational, Cyclo). T{} must be the
// additive zero and arithmetic must be exact.
template <typename T>
class Mat {
 public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Mat out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

 private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

// Fraction-free (Bareiss) determinant. Row swaps flip the sign; the
// division by the previous pivot is exact over any integral domain and
// in particular over our fields.
template <typename T>
T bareiss_det(Mat<T> m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return T(1);
    bool negate = false;
    T div_prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == T{}) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == T{}) ++p;
            if (p == n) return T{};
            m.swap_rows(k, p);
            negate = !negate;
        }
        const T pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = (m(i, j) * pivot - m(i, k) * m(k, j)) / div_prev;
            m(i, k) = T{};
        }
        div_prev = pivot;
    }
    T det = m(n - 1, n - 1);
    if (negate) det = -det;
    return det;
}

// Solves A x = b exactly by Gauss-Jordan elimination; A may be
// rectangular. Returns a solution with free variables set to zero, or
// nullopt when the system is inconsistent.
template <typename T>
std::optional<std::vector<T>> solve_linear(Mat<T> a, std::vector<T> b) {
    const std::size_t rows = a.rows(), cols = a.cols();
    if (b.size() != rows) throw std::invalid_argument("solve_linear shape mismatch");
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && a(p, col) == T{}) ++p;
        if (p == rows) continue;
        if (p != row) {
            a.swap_rows(row, p);
            std::swap(b[row], b[p]);
        }
        const T inv_pivot = T(1) / a(row, col);
        for (std::size_t j = col; j < cols; ++j) a(row, j) = a(row, j) * inv_pivot;
        b[row] = b[row] * inv_pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a(i, col) == T{}) continue;
            const T factor = a(i, col);
            for (std::size_t j = col; j < cols; ++j) a(i, j) = a(i, j) - factor * a(row, j);
            b[i] = b[i] - factor * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (!(b[i] == T{})) return std::nullopt;
    std::vector<T> x(cols, T{});
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = b[r];
    return x;
}

}  // namespace mtc

#endif
