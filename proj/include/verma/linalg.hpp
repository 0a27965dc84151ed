#ifndef VERMA_LINALG_HPP
#define VERMA_LINALG_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "verma/rational.hpp"

namespace verma {

/// Dense row-major matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

/// Fraction-free (Bareiss) elimination. Returns the rank; the matrix is
/// consumed. The determinant of a square input is reported through `det`.
inline std::size_t bareiss_rank(IntegerMatrix m, Integer* det = nullptr)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    Integer prev = 1;
    std::size_t rank = 0;
    int sign = 1;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && m(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank) {
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(piv, k), m(rank, k));
            sign = -sign;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                m(r, k) = m(rank, c) * m(r, k) - m(r, c) * m(rank, k);
                mpz_divexact(m(r, k).get_mpz_t(), m(r, k).get_mpz_t(), prev.get_mpz_t());
            }
            m(r, c) = 0;
        }
        prev = m(rank, c);
        ++rank;
    }
    if (det) {
        if (rows != cols) throw std::invalid_argument("determinant of a non-square matrix");
        *det = rank == rows ? Integer(sign * prev) : Integer(0);
    }
    return rank;
}

inline Integer determinant(const IntegerMatrix& m)
{
    Integer det;
    bareiss_rank(m, &det);
    return det;
}

/// Determinant over GF(2) of the entrywise reduction.
inline int determinant_mod2(const IntegerMatrix& m)
{
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<int>> a(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = mpz_odd_p(m(i, j).get_mpz_t()) ? 1 : 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && !a[piv][c]) ++piv;
        if (piv == n) return 0;
        std::swap(a[piv], a[c]);
        for (std::size_t r = c + 1; r < n; ++r)
            if (a[r][c])
                for (std::size_t k = c; k < n; ++k) a[r][k] ^= a[c][k];
    }
    return 1;
}

/// Reduced row echelon form over Q in place; returns pivot columns.
inline std::vector<std::size_t> rref(RationalMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t piv = row;
        while (piv < m.rows() && m(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(row, k));
        Rational inv = 1 / m(row, c);
        for (std::size_t k = c; k < m.cols(); ++k) m(row, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, c) == 0) continue;
            Rational f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(row, k);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

/// Basis of the right null space {v : m v = 0}.
inline std::vector<RationalVector> null_space(RationalMatrix m)
{
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(m.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline std::size_t rank(RationalMatrix m) { return rref(m).size(); }

}  // namespace verma

#endif  // VERMA_LINALG_HPP
