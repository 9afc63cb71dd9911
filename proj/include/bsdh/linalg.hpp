#ifndef BSDH_LINALG_HPP
#define BSDH_LINALG_HPP

#include "bsdh/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bsdh {

// Dense rational matrix, row-major.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Rational& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Rational& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    static Mat identity(int n)
    {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }
};

using Vec = std::vector<Rational>;

inline Mat operator*(const Mat& x, const Mat& y)
{
    if (x.cols != y.rows)
        throw std::invalid_argument("matrix shape mismatch");
    Mat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Rational& v = x(i, k);
            if (v == 0)
                continue;
            for (int j = 0; j < y.cols; ++j)
                if (y(k, j) != 0)
                    z(i, j) += v * y(k, j);
        }
    return z;
}

inline Vec mat_vec(const Mat& m, const Vec& v)
{
    Vec out(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m(i, j) != 0 && v[j] != 0)
                out[i] += m(i, j) * v[j];
    return out;
}

// In-place reduced row echelon form; returns pivot columns.
inline std::vector<int> rref(Mat& m)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = r;
        while (p < m.rows && m(p, c) == 0)
            ++p;
        if (p == m.rows)
            continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j)
                std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (int j = c; j < m.cols; ++j)
            m(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            Rational f = m(i, c);
            for (int j = c; j < m.cols; ++j)
                if (m(r, j) != 0)
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(Mat m) { return static_cast<int>(rref(m).size()); }

// Basis of {x : m x = 0}.
inline std::vector<Vec> nullspace(Mat m)
{
    std::vector<int> piv = rref(m);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv)
        is_piv[c] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_piv[f])
            continue;
        Vec x(m.cols);
        x[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r)
            x[piv[r]] = -m(static_cast<int>(r), f);
        basis.push_back(std::move(x));
    }
    return basis;
}

inline Mat inverse(const Mat& m)
{
    if (m.rows != m.cols)
        throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<int> piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1)
        throw std::domain_error("singular matrix");
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            inv(i, j) = aug(i, n + j);
    return inv;
}

// Incremental span membership: keeps an echelon basis of the vectors added so far.
class SpanBuilder {
public:
    explicit SpanBuilder(int dim) : dim_(dim) {}

    // Adds v if it is independent of the current span; returns whether it was added.
    bool add(Vec v)
    {
        reduce(v);
        int p = 0;
        while (p < dim_ && v[p] == 0)
            ++p;
        if (p == dim_)
            return false;
        Rational inv = 1 / v[p];
        for (auto& x : v)
            x *= inv;
        for (auto& row : rows_) {
            if (row.second[p] == 0)
                continue;
            Rational f = row.second[p];
            for (int j = 0; j < dim_; ++j)
                row.second[j] -= f * v[j];
        }
        rows_.emplace_back(p, std::move(v));
        return true;
    }

    bool contains(Vec v) const
    {
        reduce(v);
        for (const auto& x : v)
            if (x != 0)
                return false;
        return true;
    }

    int size() const { return static_cast<int>(rows_.size()); }

private:
    void reduce(Vec& v) const
    {
        for (const auto& [p, row] : rows_) {
            if (v[p] == 0)
                continue;
            Rational f = v[p];
            for (int j = 0; j < dim_; ++j)
                if (row[j] != 0)
                    v[j] -= f * row[j];
        }
    }

    int dim_;
    std::vector<std::pair<int, Vec>> rows_;
};

} // namespace bsdh

#endif
