#pragma once

/*
 * Trace invariants c[i,j] = tr(L(x)^i) tr(L(y)^j) / tr(L(x)^i L(y)^j).
 *
 * Both traces are polynomials in the generic coordinates. When the
 * denominator is not identically zero and the ratio is the same scalar for
 * all x, y, the value is an invariant of the algebra that is preserved
 * under degeneration whenever it is defined on both sides. The decidable
 * constancy test used here is: den != 0 identically and num = c * den as
 * polynomials; well-definedness on every nonzero complex pair is not
 * decided, but denominator zeros found by rational sampling are reported
 * through den_vanishes_at_sample.
 */

#include <prelie/algebra.hpp>

namespace prelie {

struct CInvariant {
    enum class Kind { Constant, NonConstant, Undefined } kind = Kind::Undefined;
    /// For Constant: the value, as a rational function of the parameter
    /// (a constant one when the algebra itself is rational).
    RatFunc value;
    bool den_vanishes_at_sample = false;

    bool is_constant() const { return kind == Kind::Constant; }
    Rational rational_value() const { return value.as_rational(); }
    std::string describe() const;
};

CInvariant c_invariant(const Algebra<Rational>& a, int i, int j);
CInvariant c_invariant(const Algebra<UniPoly>& a, int i, int j);

struct CCompare {
    bool ruled_out = false;
    int i = 0, j = 0;
    Rational lhs, rhs;
};

/// First (i, j) <= (max_i, max_j) in row-major order where both invariants
/// are constant and differ; pairs with an undefined or non-constant side
/// are skipped.
CCompare c_compare(const Algebra<Rational>& a, const Algebra<Rational>& b, int max_i, int max_j);

}  // namespace prelie
