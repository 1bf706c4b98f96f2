#pragma once

/*
 * Sparse multivariate polynomials over the rationals.
 *
 * A polynomial is a map from exponent vectors to nonzero coefficients over
 * a fixed ordered variable alphabet of size nvars(); arithmetic requires
 * both operands to share the alphabet. Zero coefficients are never stored,
 * so equality of polynomials is equality of the term maps.
 */

#include <prelie/rational.hpp>
#include <prelie/unipoly.hpp>

#include <map>
#include <string>
#include <vector>

namespace prelie {

class MultiPoly {
public:
    using Exponents = std::vector<int>;

    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    Rational coeff(const Exponents& e) const;
    int degree_in(int var) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly scaled(const Rational& c) const;

    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    void add_term(const Exponents& e, const Rational& c);

    Rational evaluate(const std::vector<Rational>& point) const;
    /// Replace one variable by a rational value; the alphabet is unchanged.
    MultiPoly substituted(int var, const Rational& value) const;
    /// Regroup as a polynomial in `var`: keys are exponent vectors with the
    /// `var` entry zeroed, values collect the coefficients by power of `var`.
    std::map<Exponents, UniPoly> collect(int var) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<Exponents, Rational> terms_;
    void check_alphabet(const MultiPoly& o) const;
};

}  // namespace prelie
