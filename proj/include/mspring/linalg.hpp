#pragma once

// Exact dense linear algebra over Q.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mspring::linalg {

using Rational = mpq_class;

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    Rational& operator()(int i, int j) { return a_[index(i, j)]; }
    const Rational& operator()(int i, int j) const { return a_[index(i, j)]; }

    void swap_rows(int i, int k)
    {
        for (int j = 0; j < cols_; ++j)
            std::swap((*this)(i, j), (*this)(k, j));
    }

private:
    std::size_t index(int i, int j) const
    {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
    }
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

/// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<int> rref(Matrix& m)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (m(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        m.swap_rows(row, piv);
        Rational s = 1 / m(row, col);
        for (int j = col; j < m.cols(); ++j)
            m(row, j) *= s;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == 0)
                continue;
            Rational c = m(i, col);
            for (int j = col; j < m.cols(); ++j)
                m(i, j) -= c * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(Matrix m) { return static_cast<int>(rref(m).size()); }

/// Some solution of A x = b, or nothing when the system is inconsistent.
inline std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b)
{
    if (static_cast<int>(b.size()) != a.rows())
        throw std::invalid_argument("right-hand side has wrong length");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    std::vector<Rational> x(static_cast<std::size_t>(a.cols()));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = aug(static_cast<int>(r), a.cols());
    return x;
}

/// Inverse of a square matrix; throws when singular.
inline Matrix inverse(const Matrix& a)
{
    if (a.rows() != a.cols())
        throw std::invalid_argument("inverse of a non-square matrix");
    const int n = a.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots[static_cast<std::size_t>(n - 1)] >= n))
        throw std::domain_error("matrix is singular");
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out(i, j) = aug(i, n + j);
    return out;
}

} // namespace mspring::linalg
