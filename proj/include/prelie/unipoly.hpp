#pragma once

/*
 * Dense univariate polynomials over the rationals.
 *
 * Used both for polynomials in the deformation variable t and for
 * polynomials in a family parameter. The variable has no intrinsic name;
 * printing takes one.
 *
 * Invariant: the coefficient vector carries no trailing zeros, so the zero
 * polynomial is the empty vector and degree() of a nonzero polynomial is
 * the index of its (nonzero) leading coefficient.
 */

#include <prelie/rational.hpp>

#include <string>
#include <vector>

namespace prelie {

class UniPoly {
public:
    UniPoly() = default;
    UniPoly(const Rational& c);
    UniPoly(int c) : UniPoly(Rational(c)) {}
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly variable();
    static UniPoly monomial(const Rational& c, int power);

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    /// Index of the lowest nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;
    Rational coeff(int power) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly scaled(const Rational& c) const;
    UniPoly shifted(int power) const;  // multiply by x^power
    UniPoly pow(int e) const;          // e >= 0

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    Rational evaluate(const Rational& x) const;
    UniPoly monic() const;

    /// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
    static void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
    /// Exact quotient; throws std::domain_error if the division leaves a remainder.
    UniPoly divided_by(const UniPoly& b) const;

    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<Rational> c_;
    void trim();
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

}  // namespace prelie
