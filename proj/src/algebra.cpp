#include <prelie/algebra.hpp>

namespace prelie {

namespace {

// Rows (j, k) in lexicographic order, columns = coordinates of x.
Matrix<Rational> annihilator_system(const Algebra<Rational>& a, bool left) {
    const int n = a.dim;
    Matrix<Rational> m(n * n, n, Rational(0));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) m(j * n + k, i) = left ? a.at(i, j, k) : a.at(j, i, k);
    return m;
}

Subspace from_kernel(const Matrix<Rational>& system) {
    KernelResult k = kernel(system);
    return Subspace{static_cast<int>(k.basis.size()), std::move(k.basis)};
}

}  // namespace

Subspace left_annihilator(const Algebra<Rational>& a) { return from_kernel(annihilator_system(a, true)); }

Subspace right_annihilator(const Algebra<Rational>& a) { return from_kernel(annihilator_system(a, false)); }

Subspace center(const Algebra<Rational>& a) {
    const int n = a.dim;
    Matrix<Rational> stacked(2 * n * n, n, Rational(0));
    const Matrix<Rational> l = annihilator_system(a, true);
    const Matrix<Rational> r = annihilator_system(a, false);
    for (int row = 0; row < n * n; ++row) {
        for (int col = 0; col < n; ++col) {
            stacked(row, col) = l(row, col);
            stacked(n * n + row, col) = r(row, col);
        }
    }
    return from_kernel(stacked);
}

std::vector<std::string> coordinate_names(int dim) {
    std::vector<std::string> names;
    for (int i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
    for (int i = 0; i < dim; ++i) names.push_back("y" + std::to_string(i + 1));
    names.push_back("a");
    return names;
}

MultiPoly embed_scalar(int dim, const Rational& c) { return MultiPoly::constant(coordinate_count(dim), c); }

MultiPoly embed_parameter_poly(int dim, const UniPoly& p) {
    const int nv = coordinate_count(dim);
    MultiPoly out(nv);
    MultiPoly::Exponents e(nv, 0);
    for (int k = 0; k <= p.degree(); ++k) {
        e[parameter_index(dim)] = k;
        out.add_term(e, p.coeff(k));
    }
    return out;
}

namespace {

template <class R>
Matrix<MultiPoly> multiplication_operator(const Algebra<R>& a, Slot slot, bool left,
                                          MultiPoly (*embed)(int, const R&)) {
    const int n = a.dim;
    const int nv = coordinate_count(n);
    Matrix<MultiPoly> m(n, n, MultiPoly(nv));
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            MultiPoly entry(nv);
            for (int j = 0; j < n; ++j) {
                const R& coeff = left ? a.at(j, i, k) : a.at(i, j, k);
                entry += embed(n, coeff) * MultiPoly::variable(nv, coordinate_index(n, slot, j));
            }
            m(k, i) = entry;
        }
    }
    return m;
}

}  // namespace

Matrix<MultiPoly> left_operator(const Algebra<Rational>& a, Slot slot) {
    return multiplication_operator(a, slot, true, &embed_scalar);
}
Matrix<MultiPoly> left_operator(const Algebra<UniPoly>& a, Slot slot) {
    return multiplication_operator(a, slot, true, &embed_parameter_poly);
}
Matrix<MultiPoly> right_operator(const Algebra<Rational>& a, Slot slot) {
    return multiplication_operator(a, slot, false, &embed_scalar);
}
Matrix<MultiPoly> right_operator(const Algebra<UniPoly>& a, Slot slot) {
    return multiplication_operator(a, slot, false, &embed_parameter_poly);
}

Algebra<Rational> base_change(const Algebra<Rational>& a, const Matrix<Rational>& g) {
    if (g.rows() != a.dim || g.cols() != a.dim) throw DimensionMismatch();
    const int n = a.dim;
    const Matrix<Rational> ginv = inverse(g, Rational(1), Rational(0));
    Algebra<Rational> out(n, a.label);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // product of g*e_i and g*e_j in the e-basis
            std::vector<Rational> w(n, Rational(0));
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    const Rational f = g(p, i) * g(q, j);
                    if (is_zero(f)) continue;
                    for (int r = 0; r < n; ++r) w[r] += f * a.at(p, q, r);
                }
            for (int k = 0; k < n; ++k) {
                Rational acc(0);
                for (int r = 0; r < n; ++r) acc += ginv(k, r) * w[r];
                out.at(i, j, k) = acc;
            }
        }
    }
    return out;
}

Algebra<Rational> instantiate(const Algebra<UniPoly>& a, const Rational& value) {
    Algebra<Rational> out(a.dim, a.label);
    for (std::size_t k = 0; k < a.c.size(); ++k) out.c[k] = a.c[k].evaluate(value);
    return out;
}

Algebra<UniPoly> as_parametric(const Algebra<Rational>& a) {
    Algebra<UniPoly> out(a.dim, a.label);
    for (std::size_t k = 0; k < a.c.size(); ++k) out.c[k] = UniPoly(a.c[k]);
    return out;
}

std::string describe_products(const Algebra<Rational>& a) {
    std::string out;
    for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < a.dim; ++j) {
            std::string rhs;
            for (int k = 0; k < a.dim; ++k) {
                const Rational& c = a.at(i, j, k);
                if (is_zero(c)) continue;
                if (!rhs.empty()) rhs += " + ";
                if (c == 1)
                    rhs += "e" + std::to_string(k + 1);
                else
                    rhs += "(" + to_string(c) + ")*e" + std::to_string(k + 1);
            }
            if (rhs.empty()) continue;
            out += "e" + std::to_string(i + 1) + "*e" + std::to_string(j + 1) + " = " + rhs + "\n";
        }
    }
    if (out.empty()) out = "(zero product)\n";
    return out;
}

}  // namespace prelie
