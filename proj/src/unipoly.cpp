#include <prelie/unipoly.hpp>

#include <stdexcept>

namespace prelie {

UniPoly::UniPoly(const Rational& c) {
    if (!prelie::is_zero(c)) c_.push_back(c);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::variable() { return monomial(1, 1); }

UniPoly UniPoly::monomial(const Rational& c, int power) {
    UniPoly p;
    if (prelie::is_zero(c)) return p;
    p.c_.assign(power + 1, Rational(0));
    p.c_[power] = c;
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && prelie::is_zero(c_.back())) c_.pop_back();
}

int UniPoly::valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (!prelie::is_zero(c_[k])) return static_cast<int>(k);
    return -1;
}

Rational UniPoly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(c_.size())) return Rational(0);
    return c_[power];
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
    r.trim();
    return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    UniPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (prelie::is_zero(c_[i])) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const Rational& c) const {
    if (prelie::is_zero(c)) return UniPoly();
    UniPoly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

UniPoly UniPoly::shifted(int power) const {
    if (is_zero()) return UniPoly();
    UniPoly r;
    r.c_.assign(c_.size() + power, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k + power] = c_[k];
    return r;
}

UniPoly UniPoly::pow(int e) const {
    if (e < 0) throw std::domain_error("negative polynomial power");
    UniPoly r(1);
    UniPoly base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational r(0);
    for (std::size_t k = c_.size(); k-- > 0;) r = r * x + c_[k];
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / leading());
}

void UniPoly::divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    q = UniPoly();
    r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational factor = r.leading() / b.leading();
        q += UniPoly::monomial(factor, shift);
        r -= b.scaled(factor).shifted(shift);
    }
}

UniPoly UniPoly::divided_by(const UniPoly& b) const {
    UniPoly q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    // Remainders are renormalized to monic each step to keep the rational
    // coefficients of the sequence from blowing up.
    UniPoly r0 = a, r1 = b.is_zero() ? b : b.monic();
    while (!r1.is_zero()) {
        UniPoly q, r2;
        UniPoly::divmod(r0, r1, q, r2);
        r0 = r1;
        r1 = r2.is_zero() ? r2 : r2.monic();
    }
    return r0.monic();
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational c = coeff(k);
        if (prelie::is_zero(c)) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const bool unit = (mag == 1);
        if (k == 0) {
            out += prelie::to_string(mag);
        } else {
            if (!unit) out += prelie::to_string(mag) + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace prelie
