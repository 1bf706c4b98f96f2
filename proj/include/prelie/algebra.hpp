#pragma once

/*
 * Finite-dimensional algebras given by structure constants.
 *
 * An Algebra<R> stores the products of basis vectors, e_i * e_j =
 * sum_k c[i][j][k] e_k, with coefficients in R. Three coefficient rings are
 * used: Rational for concrete algebras, UniPoly for one-parameter families
 * (the parameter is the polynomial variable), and RatFunc for algebras
 * obtained by a basis change over rational functions in t.
 *
 * The identity predicates check their multilinear identity on all basis
 * tuples, which suffices by multilinearity; for parametric algebras this
 * means the identity holds for every value of the parameter.
 */

#include <prelie/linalg.hpp>
#include <prelie/matrix.hpp>
#include <prelie/multipoly.hpp>
#include <prelie/ratfunc.hpp>

#include <string>
#include <vector>

namespace prelie {

struct DimensionMismatch : std::invalid_argument {
    DimensionMismatch() : std::invalid_argument("dimension mismatch") {}
};

template <class R>
struct Algebra {
    int dim = 0;
    std::vector<R> c;  // c[((i*dim)+j)*dim+k], all indices 0-based
    std::string label;

    Algebra() = default;
    explicit Algebra(int n, std::string name = "") : dim(n), c(n * n * n, R(0)), label(std::move(name)) {
        if (n <= 0) throw std::invalid_argument("algebra dimension must be positive");
    }

    R& at(int i, int j, int k) { return c[(i * dim + j) * dim + k]; }
    const R& at(int i, int j, int k) const { return c[(i * dim + j) * dim + k]; }

    bool same_constants(const Algebra& o) const { return dim == o.dim && c == o.c; }

    /// Bilinear extension of the structure constants.
    std::vector<R> product(const std::vector<R>& u, const std::vector<R>& v) const {
        if (static_cast<int>(u.size()) != dim || static_cast<int>(v.size()) != dim) throw DimensionMismatch();
        std::vector<R> out(dim, R(0));
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                const R uv = u[i] * v[j];
                for (int k = 0; k < dim; ++k) out[k] = out[k] + uv * at(i, j, k);
            }
        }
        return out;
    }

    std::vector<R> basis_vector(int i) const {
        std::vector<R> v(dim, R(0));
        v[i] = R(1);
        return v;
    }
};

namespace detail {
inline bool ring_zero(const Rational& x) { return x.is_zero(); }
inline bool ring_zero(const UniPoly& x) { return x.is_zero(); }
inline bool ring_zero(const RatFunc& x) { return x.is_zero(); }

template <class R>
bool all_zero(const std::vector<R>& v) {
    for (const auto& x : v)
        if (!ring_zero(x)) return false;
    return true;
}
}  // namespace detail

template <class R, class S>
Algebra<S> map_coefficients(const Algebra<R>& a, S (*fn)(const R&)) {
    Algebra<S> out(a.dim, a.label);
    for (std::size_t k = 0; k < a.c.size(); ++k) out.c[k] = fn(a.c[k]);
    return out;
}

/// Left symmetry of the associator, (x*y)*z - x*(y*z) = (y*x)*z - y*(x*z),
/// checked on all basis triples.
template <class R>
bool is_prelie(const Algebra<R>& a) {
    const int n = a.dim;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {  // symmetric in the first two slots
            for (int k = 0; k < n; ++k) {
                const auto ei = a.basis_vector(i), ej = a.basis_vector(j), ek = a.basis_vector(k);
                auto lhs = a.product(a.product(ei, ej), ek);
                auto rhs = a.product(ei, a.product(ej, ek));
                auto lhs2 = a.product(a.product(ej, ei), ek);
                auto rhs2 = a.product(ej, a.product(ei, ek));
                for (int m = 0; m < n; ++m) {
                    const R diff = (lhs[m] - rhs[m]) - (lhs2[m] - rhs2[m]);
                    if (!detail::ring_zero(diff)) return false;
                }
            }
        }
    }
    return true;
}

/// (x*y)*z = (x*z)*y on all basis triples.
template <class R>
bool is_novikov(const Algebra<R>& a) {
    if (!is_prelie(a)) return false;
    const int n = a.dim;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < j; ++k) {
                const auto ei = a.basis_vector(i), ej = a.basis_vector(j), ek = a.basis_vector(k);
                auto lhs = a.product(a.product(ei, ej), ek);
                auto rhs = a.product(a.product(ei, ek), ej);
                for (int m = 0; m < n; ++m) {
                    if (!detail::ring_zero(lhs[m] - rhs[m])) return false;
                }
            }
        }
    }
    return true;
}

template <class R>
bool is_commutative(const Algebra<R>& a) {
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < i; ++j)
            for (int k = 0; k < a.dim; ++k)
                if (!detail::ring_zero(a.at(i, j, k) - a.at(j, i, k))) return false;
    return true;
}

template <class R>
bool is_associative(const Algebra<R>& a) {
    const int n = a.dim;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const auto ei = a.basis_vector(i), ej = a.basis_vector(j), ek = a.basis_vector(k);
                auto lhs = a.product(a.product(ei, ej), ek);
                auto rhs = a.product(ei, a.product(ej, ek));
                for (int m = 0; m < n; ++m)
                    if (!detail::ring_zero(lhs[m] - rhs[m])) return false;
            }
        }
    }
    return true;
}

/// Commutator algebra: gamma[i][j][k] = c[i][j][k] - c[j][i][k].
template <class R>
Algebra<R> associated_lie(const Algebra<R>& a) {
    Algebra<R> g(a.dim, a.label.empty() ? "" : "lie(" + a.label + ")");
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) g.at(i, j, k) = a.at(i, j, k) - a.at(j, i, k);
    return g;
}

template <class R>
bool is_abelian(const Algebra<R>& a) {
    for (const auto& x : a.c)
        if (!detail::ring_zero(x)) return false;
    return true;
}

/// Antisymmetry plus the Jacobi identity on all basis triples.
template <class R>
bool is_lie(const Algebra<R>& a) {
    const int n = a.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            for (int k = 0; k < n; ++k)
                if (!detail::ring_zero(a.at(i, j, k) + a.at(j, i, k))) return false;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            for (int k = 0; k < j; ++k) {
                const auto ei = a.basis_vector(i), ej = a.basis_vector(j), ek = a.basis_vector(k);
                auto s1 = a.product(a.product(ei, ej), ek);
                auto s2 = a.product(a.product(ej, ek), ei);
                auto s3 = a.product(a.product(ek, ei), ej);
                for (int m = 0; m < n; ++m)
                    if (!detail::ring_zero(s1[m] + s2[m] + s3[m])) return false;
            }
        }
    }
    return true;
}

struct Subspace {
    int dim = 0;
    std::vector<std::vector<Rational>> basis;
};

Subspace left_annihilator(const Algebra<Rational>& a);
Subspace right_annihilator(const Algebra<Rational>& a);
Subspace center(const Algebra<Rational>& a);

enum class Slot { X, Y };

// Generic-coordinate alphabet: x_1..x_n, y_1..y_n, then the parameter.
inline int coordinate_count(int dim) { return 2 * dim + 1; }
inline int coordinate_index(int dim, Slot slot, int i) { return (slot == Slot::X ? 0 : dim) + i; }
inline int parameter_index(int dim) { return 2 * dim; }
std::vector<std::string> coordinate_names(int dim);

MultiPoly embed_scalar(int dim, const Rational& c);
MultiPoly embed_parameter_poly(int dim, const UniPoly& p);

/// Matrix of left multiplication by a generic element of the given slot;
/// entries are linear forms in that slot's coordinates.
Matrix<MultiPoly> left_operator(const Algebra<Rational>& a, Slot slot);
Matrix<MultiPoly> left_operator(const Algebra<UniPoly>& a, Slot slot);
Matrix<MultiPoly> right_operator(const Algebra<Rational>& a, Slot slot);
Matrix<MultiPoly> right_operator(const Algebra<UniPoly>& a, Slot slot);

/// Structure constants in the basis g*e_1, ..., g*e_n (exact conjugation
/// by a constant invertible matrix).
Algebra<Rational> base_change(const Algebra<Rational>& a, const Matrix<Rational>& g);

/// Instantiate the family parameter of a one-parameter algebra.
Algebra<Rational> instantiate(const Algebra<UniPoly>& a, const Rational& value);
/// Triviality embedding of a concrete algebra into its parametric form.
Algebra<UniPoly> as_parametric(const Algebra<Rational>& a);

std::string describe_products(const Algebra<Rational>& a);

}  // namespace prelie
