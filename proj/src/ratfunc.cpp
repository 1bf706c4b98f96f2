#include <prelie/ratfunc.hpp>

namespace prelie {

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator in rational function");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = UniPoly(1);
        return;
    }
    UniPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
    }
    const Rational lead = den_.leading();
    if (!(lead == 1)) {
        const Rational inv = Rational(1) / lead;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

Rational RatFunc::as_rational() const {
    if (!is_constant()) throw std::domain_error("rational function is not constant");
    if (is_zero()) return Rational(0);
    return num_.coeff(0) / den_.coeff(0);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    const UniPoly g = gcd(den_, o.den_);
    const UniPoly left = o.den_.divided_by(g), right = den_.divided_by(g);
    return RatFunc(num_ * left + o.num_ * right, den_ * left);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    // cross-cancel before multiplying to keep degrees down
    const UniPoly g1 = gcd(num_, o.den_);
    const UniPoly g2 = gcd(o.num_, den_);
    return RatFunc(num_.divided_by(g1) * o.num_.divided_by(g2), den_.divided_by(g2) * o.den_.divided_by(g1));
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero rational function");
    return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r(1);
    RatFunc base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) r = r * base;
        if (e > 1) base = base * base;
    }
    return r;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (is_polynomial()) {
        const Rational d = den_.coeff(0);
        if (d == 1) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/" + prelie::to_string(d);
    }
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    if (num_.degree() > 0 || num_.coeff(0) < 0) n = "(" + n + ")";
    if (den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

std::optional<Rational> limit_at_zero(const RatFunc& f) {
    if (f.is_zero()) return Rational(0);
    const int vn = f.num().valuation();
    const int vd = f.den().valuation();
    if (vn > vd) return Rational(0);
    if (vn == vd) return f.num().coeff(vn) / f.den().coeff(vd);
    return std::nullopt;
}

}  // namespace prelie
