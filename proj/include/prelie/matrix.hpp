#pragma once

/*
 * Dense matrices over an arbitrary commutative coefficient ring.
 *
 * The ring type only needs +, -, * and ==; constructors take an explicit
 * fill element because some rings (multivariate polynomials) carry a
 * variable alphabet that a bare default constructor cannot know.
 */

#include <stdexcept>
#include <vector>

namespace prelie {

template <class R>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const R& fill) : rows_(rows), cols_(cols), e_(rows * cols, fill) {
        if (rows <= 0 || cols <= 0) throw std::invalid_argument("matrix dimensions must be positive");
    }

    static Matrix identity(int n, const R& one, const R& zero) {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R& operator()(int i, int j) { return e_[i * cols_ + j]; }
    const R& operator()(int i, int j) const { return e_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(rows_, o.cols_, e_[0]);  // entries overwritten below
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < o.cols_; ++j) {
                R acc = (*this)(i, 0) * o(0, j);
                for (int k = 1; k < cols_; ++k) acc = acc + (*this)(i, k) * o(k, j);
                r(i, j) = acc;
            }
        }
        return r;
    }

    Matrix scaled(const R& c) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = x * c;
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_, e_[0]);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<R> apply(const std::vector<R>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
        std::vector<R> r;
        r.reserve(rows_);
        for (int i = 0; i < rows_; ++i) {
            R acc = (*this)(i, 0) * v[0];
            for (int k = 1; k < cols_; ++k) acc = acc + (*this)(i, k) * v[k];
            r.push_back(acc);
        }
        return r;
    }

    Matrix pow(int e, const R& one, const R& zero) const {
        if (rows_ != cols_) throw std::invalid_argument("power of non-square matrix");
        if (e < 0) throw std::invalid_argument("negative matrix power");
        Matrix r = identity(rows_, one, zero);
        for (int k = 0; k < e; ++k) r = r * (*this);
        return r;
    }

    R trace() const {
        if (rows_ != cols_) throw std::invalid_argument("trace of non-square matrix");
        R acc = (*this)(0, 0);
        for (int i = 1; i < rows_; ++i) acc = acc + (*this)(i, i);
        return acc;
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

private:
    int rows_, cols_;
    std::vector<R> e_;
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
    }
};

}  // namespace prelie
