#pragma once

// Dense linear algebra over a prime field F_p, used by the point-counting oracle.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace mspring::fp {

inline bool is_prime(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

class Field {
public:
    explicit Field(int p) : p_(p)
    {
        if (!is_prime(p))
            throw std::invalid_argument("field size " + std::to_string(p) + " is not prime");
    }
    int order() const noexcept { return p_; }
    int add(int a, int b) const noexcept { return (a + b) % p_; }
    int sub(int a, int b) const noexcept { return (a - b + p_) % p_; }
    int mul(int a, int b) const noexcept { return static_cast<int>((static_cast<std::int64_t>(a) * b) % p_); }
    int neg(int a) const noexcept { return (p_ - a) % p_; }
    int inv(int a) const
    {
        if (a % p_ == 0)
            throw std::domain_error("inverse of zero");
        // Fermat
        std::int64_t r = 1, b = a, e = p_ - 2;
        while (e > 0) {
            if (e & 1)
                r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return static_cast<int>(r);
    }

private:
    int p_;
};

struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r * c), 0) {}

    int& at(int i, int j) { return a[static_cast<std::size_t>(i * cols + j)]; }
    int at(int i, int j) const { return a[static_cast<std::size_t>(i * cols + j)]; }

    static Matrix identity(int n)
    {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }
};

inline Matrix multiply(const Field& f, const Matrix& x, const Matrix& y)
{
    if (x.cols != y.rows)
        throw std::invalid_argument("matrix shape mismatch");
    Matrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int xik = x.at(i, k);
            if (!xik)
                continue;
            for (int j = 0; j < y.cols; ++j)
                z.at(i, j) = f.add(z.at(i, j), f.mul(xik, y.at(k, j)));
        }
    return z;
}

/// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(const Field& f, Matrix& m)
{
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int i = row; i < m.rows; ++i)
            if (m.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        for (int j = 0; j < m.cols; ++j)
            std::swap(m.at(row, j), m.at(piv, j));
        int s = f.inv(m.at(row, col));
        for (int j = 0; j < m.cols; ++j)
            m.at(row, j) = f.mul(m.at(row, j), s);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || !m.at(i, col))
                continue;
            int c = m.at(i, col);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline int rank(const Field& f, Matrix m) { return static_cast<int>(rref(f, m).size()); }

/// Basis of the null space, as the columns of the returned matrix.
inline Matrix kernel(const Field& f, Matrix m)
{
    auto pivots = rref(f, m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int c : pivots)
        is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)])
            free_cols.push_back(c);
    Matrix k(m.cols, static_cast<int>(free_cols.size()));
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        int fc = free_cols[t];
        k.at(fc, static_cast<int>(t)) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            k.at(pivots[r], static_cast<int>(t)) = f.neg(m.at(static_cast<int>(r), fc));
    }
    return k;
}

inline Matrix inverse(const Field& f, const Matrix& m)
{
    if (m.rows != m.cols)
        throw std::invalid_argument("inverse of a non-square matrix");
    int n = m.rows;
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto piv = rref(f, aug);
    if (static_cast<int>(piv.size()) < n || (n > 0 && piv[static_cast<std::size_t>(n - 1)] >= n))
        throw std::domain_error("singular matrix");
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

/// Calls visit(M) for every r x k matrix in reduced row echelon form of full
/// rank r, i.e. once per r-dimensional subspace of F^k.
inline void for_each_subspace(const Field& f, int k, int r, const std::function<void(const Matrix&)>& visit)
{
    if (r < 0 || r > k)
        return;
    std::vector<int> pivots(static_cast<std::size_t>(r));
    std::function<void(int, int)> choose = [&](int idx, int start) {
        if (idx == r) {
            std::vector<std::pair<int, int>> free_slots;
            std::vector<bool> is_pivot(static_cast<std::size_t>(k), false);
            for (int c : pivots)
                is_pivot[static_cast<std::size_t>(c)] = true;
            for (int i = 0; i < r; ++i)
                for (int c = pivots[static_cast<std::size_t>(i)] + 1; c < k; ++c)
                    if (!is_pivot[static_cast<std::size_t>(c)])
                        free_slots.emplace_back(i, c);
            Matrix m(r, k);
            for (int i = 0; i < r; ++i)
                m.at(i, pivots[static_cast<std::size_t>(i)]) = 1;
            std::function<void(std::size_t)> fill = [&](std::size_t s) {
                if (s == free_slots.size()) {
                    visit(m);
                    return;
                }
                for (int val = 0; val < f.order(); ++val) {
                    m.at(free_slots[s].first, free_slots[s].second) = val;
                    fill(s + 1);
                }
                m.at(free_slots[s].first, free_slots[s].second) = 0;
            };
            fill(0);
            return;
        }
        for (int c = start; c <= k - (r - idx); ++c) {
            pivots[static_cast<std::size_t>(idx)] = c;
            choose(idx + 1, c + 1);
        }
    };
    choose(0, 0);
}

} // namespace mspring::fp
