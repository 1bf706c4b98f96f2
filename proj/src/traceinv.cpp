#include <prelie/traceinv.hpp>

namespace prelie {

namespace {

template <class R>
CInvariant c_invariant_impl(const Algebra<R>& a, int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("trace invariant orders must be positive");
    const int n = a.dim;
    const int nv = coordinate_count(n);
    const MultiPoly one = MultiPoly::constant(nv, 1);
    const MultiPoly zero(nv);

    const Matrix<MultiPoly> lx = left_operator(a, Slot::X);
    const Matrix<MultiPoly> ly = left_operator(a, Slot::Y);
    const Matrix<MultiPoly> pi = lx.pow(i, one, zero);
    const Matrix<MultiPoly> qj = ly.pow(j, one, zero);

    const MultiPoly num = pi.trace() * qj.trace();
    const MultiPoly den = (pi * qj).trace();

    CInvariant out;
    if (den.is_zero()) {
        out.kind = CInvariant::Kind::Undefined;
        return out;
    }

    // Sample the denominator at deterministic nonzero rational pairs; a hit
    // means c[i,j] fails to be defined everywhere even if the ratio is
    // constant where defined.
    {
        unsigned state = 123456789u + 977u * static_cast<unsigned>(i) + 31u * static_cast<unsigned>(j);
        auto next_small = [&state]() {
            state = state * 1103515245u + 12345u;
            const int v = static_cast<int>((state >> 16) % 7u) - 3;  // -3..3
            return Rational(v == 0 ? 1 : v);
        };
        for (int trial = 0; trial < 24 && !out.den_vanishes_at_sample; ++trial) {
            std::vector<Rational> point(nv, Rational(0));
            for (int v = 0; v < 2 * n; ++v) point[v] = next_small();
            point[parameter_index(n)] = next_small();
            if (is_zero(den.evaluate(point))) out.den_vanishes_at_sample = true;
        }
    }

    // Constancy in x, y means num = c(a) * den for a single rational
    // function c of the parameter; take the candidate from the first
    // monomial of den and verify by cross-multiplication.
    const int pvar = parameter_index(n);
    const auto den_parts = den.collect(pvar);
    const auto& [mono, den_coeff] = *den_parts.begin();
    UniPoly num_coeff;
    {
        const auto num_parts = num.collect(pvar);
        auto it = num_parts.find(mono);
        if (it != num_parts.end()) num_coeff = it->second;
    }
    const MultiPoly lhs = num * embed_parameter_poly(n, den_coeff);
    const MultiPoly rhs = den * embed_parameter_poly(n, num_coeff);
    if (lhs == rhs) {
        out.kind = CInvariant::Kind::Constant;
        out.value = RatFunc(num_coeff, den_coeff);
    } else {
        out.kind = CInvariant::Kind::NonConstant;
    }
    return out;
}

}  // namespace

CInvariant c_invariant(const Algebra<Rational>& a, int i, int j) { return c_invariant_impl(a, i, j); }
CInvariant c_invariant(const Algebra<UniPoly>& a, int i, int j) { return c_invariant_impl(a, i, j); }

std::string CInvariant::describe() const {
    switch (kind) {
        case Kind::Undefined:
            return "undefined";
        case Kind::NonConstant:
            return "nonconstant";
        case Kind::Constant:
            return value.to_string("a");
    }
    return "";
}

CCompare c_compare(const Algebra<Rational>& a, const Algebra<Rational>& b, int max_i, int max_j) {
    CCompare out;
    for (int i = 1; i <= max_i; ++i) {
        for (int j = 1; j <= max_j; ++j) {
            const CInvariant ca = c_invariant(a, i, j);
            const CInvariant cb = c_invariant(b, i, j);
            if (!ca.is_constant() || !cb.is_constant()) continue;
            const Rational va = ca.rational_value(), vb = cb.rational_value();
            if (va != vb) {
                out.ruled_out = true;
                out.i = i;
                out.j = j;
                out.lhs = va;
                out.rhs = vb;
                return out;
            }
        }
    }
    return out;
}

}  // namespace prelie
