#include <prelie/derivations.hpp>

namespace prelie {

const std::vector<DerivationWeights>& default_weight_samples() {
    static const std::vector<DerivationWeights> samples = {
        {1, 1, 1}, {1, 1, 0}, {1, 0, 1}, {2, 1, 1}, {0, 1, 1}, {1, 2, 0},
    };
    return samples;
}

Matrix<Rational> weighted_derivation_system(const Algebra<Rational>& a, const DerivationWeights& w) {
    const int n = a.dim;
    const auto col_of = [n](int row, int col) { return col * n + row; };  // d stacked column-major
    Matrix<Rational> m(n * n * n, n * n, Rational(0));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                const int row = (i * n + j) * n + k;
                for (int l = 0; l < n; ++l) {
                    m(row, col_of(k, l)) += w.alpha * a.at(i, j, l);
                    m(row, col_of(l, i)) -= w.beta * a.at(l, j, k);
                    m(row, col_of(l, j)) -= w.gamma * a.at(i, l, k);
                }
            }
        }
    }
    return m;
}

Subspace generalized_derivations(const Algebra<Rational>& a, const DerivationWeights& w) {
    KernelResult k = kernel(weighted_derivation_system(a, w));
    return Subspace{static_cast<int>(k.basis.size()), std::move(k.basis)};
}

Subspace der(const Algebra<Rational>& a) {
    Subspace s = generalized_derivations(a, DerivationWeights{1, 1, 1});
    // Independent re-check of the Leibniz rule on basis pairs.
    for (const auto& d : s.basis) {
        const Matrix<Rational> dm = vector_as_matrix(d, a.dim);
        for (int i = 0; i < a.dim; ++i) {
            for (int j = 0; j < a.dim; ++j) {
                const auto ei = a.basis_vector(i), ej = a.basis_vector(j);
                auto lhs = dm.apply(a.product(ei, ej));
                auto rhs1 = a.product(dm.apply(ei), ej);
                auto rhs2 = a.product(ei, dm.apply(ej));
                for (int k = 0; k < a.dim; ++k) {
                    if (!is_zero(lhs[k] - rhs1[k] - rhs2[k]))
                        throw std::logic_error("derivation kernel fails the Leibniz rule");
                }
            }
        }
    }
    return s;
}

int orbit_dim(const Algebra<Rational>& a) { return a.dim * a.dim - der(a).dim; }

Matrix<Rational> vector_as_matrix(const std::vector<Rational>& d, int n) {
    if (static_cast<int>(d.size()) != n * n) throw std::invalid_argument("flattened matrix has wrong length");
    Matrix<Rational> m(n, n, Rational(0));
    for (int col = 0; col < n; ++col)
        for (int row = 0; row < n; ++row) m(row, col) = d[col * n + row];
    return m;
}

std::vector<Matrix<Rational>> subspace_as_matrices(const Subspace& s, int n) {
    std::vector<Matrix<Rational>> out;
    out.reserve(s.basis.size());
    for (const auto& d : s.basis) out.push_back(vector_as_matrix(d, n));
    return out;
}

}  // namespace prelie
