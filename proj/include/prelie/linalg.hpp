#pragma once

/*
 * Exact linear algebra.
 *
 * Rank and kernel over the rationals go through fraction-free (Bareiss)
 * elimination on an integer row-scaled copy: entries stay integral the
 * whole way down, with exact single-step divisions by the previous pivot.
 * Pivots are chosen as the first nonzero entry in column order, so ranks,
 * kernels and echelon forms are deterministic.
 *
 * Inversion and determinants are provided generically for field
 * coefficients (used with rational functions).
 */

#include <prelie/matrix.hpp>
#include <prelie/rational.hpp>

#include <stdexcept>
#include <vector>

namespace prelie {

struct SingularMatrix : std::domain_error {
    SingularMatrix() : std::domain_error("singular matrix") {}
};

struct KernelResult {
    int rank = 0;
    std::vector<std::vector<Rational>> basis;  // rank + basis.size() == cols
};

/// Exact kernel and rank via fraction-free elimination.
KernelResult kernel(const Matrix<Rational>& m);
int rank(const Matrix<Rational>& m);

/// True iff v lies in the span of the given vectors.
bool in_span(const std::vector<std::vector<Rational>>& vectors, const std::vector<Rational>& v);

/// Gauss-Jordan inverse over a field; throws SingularMatrix.
template <class R>
Matrix<R> inverse(const Matrix<R>& m, const R& one, const R& zero) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = m.rows();
    Matrix<R> a = m;
    Matrix<R> inv = Matrix<R>::identity(n, one, zero);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i) {
            if (!(a(i, col) == zero)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) throw SingularMatrix();
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        }
        const R p = a(col, col);
        for (int j = 0; j < n; ++j) {
            a(col, j) = a(col, j) / p;
            inv(col, j) = inv(col, j) / p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col) == zero) continue;
            const R f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) = a(i, j) - f * a(col, j);
                inv(i, j) = inv(i, j) - f * inv(col, j);
            }
        }
    }
    return inv;
}

template <class R>
R determinant(const Matrix<R>& m, const R& one, const R& zero) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    Matrix<R> a = m;
    R det = one;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i) {
            if (!(a(i, col) == zero)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) return zero;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = zero - det;
        }
        det = det * a(col, col);
        const R p = a(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (a(i, col) == zero) continue;
            const R f = a(i, col) / p;
            for (int j = col; j < n; ++j) a(i, j) = a(i, j) - f * a(col, j);
        }
    }
    return det;
}

}  // namespace prelie
