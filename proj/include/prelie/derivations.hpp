#pragma once

/*
 * Derivation algebras, weighted generalizations, and orbit dimension.
 *
 * A weighted derivation with weights (alpha, beta, gamma) is a linear map D
 * with alpha*D(x*y) = beta*D(x)*y + gamma*x*D(y). On structure constants
 * this is the linear system
 *
 *     sum_l (alpha c[i][j][l] d[k][l] - beta c[l][j][k] d[l][i]
 *            - gamma c[i][l][k] d[l][j]) = 0     for all i, j, k,
 *
 * assembled with rows ordered lexicographically in (i, j, k) and unknowns
 * d column-major, so the computed kernels are deterministic.
 */

#include <prelie/algebra.hpp>

namespace prelie {

struct ParametricAlgebra : std::invalid_argument {
    ParametricAlgebra() : std::invalid_argument("operation requires rational coefficients; instantiate the parameter") {}
};

struct DerivationWeights {
    Rational alpha, beta, gamma;
};

/// Weight triples sampled by the degeneration criteria.
const std::vector<DerivationWeights>& default_weight_samples();

Matrix<Rational> weighted_derivation_system(const Algebra<Rational>& a, const DerivationWeights& w);

/// Kernel of the weighted-derivation system; basis vectors are the columns
/// of D stacked column-major.
Subspace generalized_derivations(const Algebra<Rational>& a, const DerivationWeights& w);

/// Classical derivations, weights (1,1,1); the result is re-verified
/// against the Leibniz rule on all basis pairs.
Subspace der(const Algebra<Rational>& a);

/// dim End(V) - dim Der = n^2 - dim Der.
int orbit_dim(const Algebra<Rational>& a);

Matrix<Rational> vector_as_matrix(const std::vector<Rational>& d, int n);
std::vector<Matrix<Rational>> subspace_as_matrices(const Subspace& s, int n);

}  // namespace prelie
