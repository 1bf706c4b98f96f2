#pragma once

/*
 * Univariate rational functions with rational coefficients.
 *
 * Canonical form (enforced by every constructor and operation): the
 * denominator is monic and coprime to the numerator; zero is 0/1. Two
 * values are equal as functions iff their canonical forms are identical,
 * which makes the t -> 0 limit logic below well-defined.
 */

#include <prelie/unipoly.hpp>

#include <optional>
#include <stdexcept>

namespace prelie {

class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(const Rational& c) : num_(c), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(const UniPoly& p) : num_(p), den_(1) {}
    RatFunc(UniPoly num, UniPoly den);

    static RatFunc variable() { return RatFunc(UniPoly::variable()); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    /// Requires is_constant().
    Rational as_rational() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc inverse() const;
    RatFunc pow(int e) const;  // negative exponents allowed on nonzero values

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string to_string(const std::string& var = "t") const;

private:
    UniPoly num_, den_;
    void reduce();
};

/// Value of f at the puncture: compares the t-adic valuations of numerator
/// and denominator; nullopt means the function has a pole at 0.
std::optional<Rational> limit_at_zero(const RatFunc& f);

}  // namespace prelie
