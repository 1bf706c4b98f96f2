#include <prelie/multipoly.hpp>

#include <stdexcept>

namespace prelie {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("variable index out of range");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.add_term(e, 1);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0);
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MultiPoly::check_alphabet(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials over different variable alphabets");
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent vector has wrong length");
    if (prelie::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (prelie::is_zero(it->second)) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_alphabet(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_alphabet(o);
    MultiPoly r(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(nvars_);
            for (int v = 0; v < nvars_; ++v) e[v] = e1[v] + e2[v];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(nvars_);
    if (prelie::is_zero(c)) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has wrong length");
    Rational total(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (int v = 0; v < nvars_; ++v)
            for (int k = 0; k < e[v]; ++k) term *= point[v];
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::substituted(int var, const Rational& value) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Rational factor(1);
        for (int k = 0; k < e[var]; ++k) factor *= value;
        Exponents e2 = e;
        e2[var] = 0;
        r.add_term(e2, c * factor);
    }
    return r;
}

std::map<MultiPoly::Exponents, UniPoly> MultiPoly::collect(int var) const {
    std::map<Exponents, std::vector<Rational>> grouped;
    for (const auto& [e, c] : terms_) {
        Exponents key = e;
        const int power = key[var];
        key[var] = 0;
        auto& coeffs = grouped[key];
        if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(power + 1, Rational(0));
        coeffs[power] += c;
    }
    std::map<Exponents, UniPoly> out;
    for (auto& [key, coeffs] : grouped) out.emplace(key, UniPoly(std::move(coeffs)));
    return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_) throw std::invalid_argument("wrong number of variable names");
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string vars;
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[v];
            if (e[v] > 1) vars += "^" + std::to_string(e[v]);
        }
        if (vars.empty()) {
            out += prelie::to_string(mag);
        } else {
            if (!(mag == 1)) out += prelie::to_string(mag) + "*";
            out += vars;
        }
    }
    return out;
}

}  // namespace prelie
