#include <prelie/linalg.hpp>

#include <boost/multiprecision/cpp_int.hpp>

namespace prelie {

namespace {

// Row-scale a rational matrix to integers (kernel and rank are unchanged).
std::vector<std::vector<Int>> to_integer_rows(const Matrix<Rational>& m) {
    std::vector<std::vector<Int>> rows(m.rows(), std::vector<Int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i) {
        Int common(1);
        for (int j = 0; j < m.cols(); ++j) common = lcm(common, denominator(m(i, j)));
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = numerator(m(i, j)) * (common / denominator(m(i, j)));
    }
    return rows;
}

struct Echelon {
    std::vector<std::vector<Int>> rows;
    std::vector<int> pivot_cols;
};

Echelon bareiss(const Matrix<Rational>& m) {
    Echelon e{to_integer_rows(m), {}};
    auto& a = e.rows;
    const int nrows = m.rows(), ncols = m.cols();
    Int prev(1);
    int r = 0;
    for (int col = 0; col < ncols && r < nrows; ++col) {
        int pivot = -1;
        for (int i = r; i < nrows; ++i) {
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(a[pivot], a[r]);
        for (int i = r + 1; i < nrows; ++i) {
            for (int j = col + 1; j < ncols; ++j) {
                Int num = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                Int q, rem;
                divide_qr(num, prev, q, rem);
                if (rem != 0) throw std::logic_error("inexact one-step division in fraction-free elimination");
                a[i][j] = q;
            }
            a[i][col] = 0;
        }
        prev = a[r][col];
        e.pivot_cols.push_back(col);
        ++r;
    }
    return e;
}

}  // namespace

KernelResult kernel(const Matrix<Rational>& m) {
    const Echelon e = bareiss(m);
    const int ncols = m.cols();
    const int rank = static_cast<int>(e.pivot_cols.size());

    std::vector<bool> is_pivot(ncols, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;

    KernelResult out;
    out.rank = rank;
    for (int free_col = 0; free_col < ncols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free_col] = 1;
        for (int r = rank - 1; r >= 0; --r) {
            const int pc = e.pivot_cols[r];
            Rational sum(0);
            for (int j = pc + 1; j < ncols; ++j) {
                if (e.rows[r][j] != 0 && !is_zero(v[j])) sum += Rational(e.rows[r][j]) * v[j];
            }
            v[pc] = -sum / Rational(e.rows[r][pc]);
        }
        out.basis.push_back(std::move(v));
    }
    return out;
}

int rank(const Matrix<Rational>& m) { return static_cast<int>(bareiss(m).pivot_cols.size()); }

bool in_span(const std::vector<std::vector<Rational>>& vectors, const std::vector<Rational>& v) {
    if (vectors.empty()) {
        for (const auto& x : v)
            if (!is_zero(x)) return false;
        return true;
    }
    const int dim = static_cast<int>(v.size());
    const int k = static_cast<int>(vectors.size());
    Matrix<Rational> with(dim, k + 1, Rational(0));
    Matrix<Rational> without(dim, k, Rational(0));
    for (int j = 0; j < k; ++j) {
        if (static_cast<int>(vectors[j].size()) != dim) throw std::invalid_argument("span vector length mismatch");
        for (int i = 0; i < dim; ++i) {
            without(i, j) = vectors[j][i];
            with(i, j) = vectors[j][i];
        }
    }
    for (int i = 0; i < dim; ++i) with(i, k) = v[i];
    return rank(with) == rank(without);
}

}  // namespace prelie
