#include <prelie/identities.hpp>

#include <algorithm>
#include <array>
#include <map>

namespace prelie {

std::pair<int, int> multidegree(const OperatorWord& w) {
    int dx = 0, dy = 0;
    for (const auto& letter : w) (letter.slot == Slot::X ? dx : dy)++;
    return {dx, dy};
}

namespace {

const std::array<OpLetter, 4> kLetterOrder = {
    OpLetter{OpSide::L, Slot::X},
    OpLetter{OpSide::L, Slot::Y},
    OpLetter{OpSide::R, Slot::X},
    OpLetter{OpSide::R, Slot::Y},
};

void enumerate(int length, OperatorWord& current, std::vector<OperatorWord>& out, int dx, int dy) {
    if (static_cast<int>(current.size()) == length) {
        if (multidegree(current) == std::pair<int, int>{dx, dy}) out.push_back(current);
        return;
    }
    for (const auto& letter : kLetterOrder) {
        current.push_back(letter);
        enumerate(length, current, out, dx, dy);
        current.pop_back();
    }
}

}  // namespace

std::vector<OperatorWord> all_words(int deg_x, int deg_y) {
    if (deg_x < 0 || deg_y < 0) throw std::invalid_argument("negative word degree");
    std::vector<OperatorWord> out;
    OperatorWord current;
    enumerate(deg_x + deg_y, current, out, deg_x, deg_y);
    return out;
}

std::string word_to_string(const OperatorWord& w) {
    if (w.empty()) return "1";
    std::string out;
    for (const auto& letter : w) {
        if (!out.empty()) out += ".";
        out += (letter.side == OpSide::L) ? "L" : "R";
        out += (letter.slot == Slot::X) ? "x" : "y";
    }
    return out;
}

OperatorWord word_from_string(const std::string& s) {
    OperatorWord w;
    if (s == "1" || s.empty()) return w;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (pos + 2 > s.size()) throw std::invalid_argument("malformed operator word: '" + s + "'");
        const char side = s[pos], slot = s[pos + 1];
        if ((side != 'L' && side != 'R') || (slot != 'x' && slot != 'y'))
            throw std::invalid_argument("malformed operator word: '" + s + "'");
        w.push_back({side == 'L' ? OpSide::L : OpSide::R, slot == 'x' ? Slot::X : Slot::Y});
        pos += 2;
        if (pos < s.size()) {
            if (s[pos] != '.') throw std::invalid_argument("malformed operator word: '" + s + "'");
            ++pos;
        }
    }
    return w;
}

std::string OperatorIdentity::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [c, w] : terms) {
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (!(mag == 1)) out += prelie::to_string(mag) + "*";
        out += word_to_string(w);
    }
    return out;
}

OperatorIdentity make_identity(const std::vector<Rational>& coeffs, const std::vector<OperatorWord>& words) {
    if (coeffs.size() != words.size()) throw std::invalid_argument("coefficient/word count mismatch");
    OperatorIdentity t;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (!is_zero(coeffs[k])) t.terms.emplace_back(coeffs[k], words[k]);
    return t;
}

namespace {

template <class R>
Matrix<MultiPoly> evaluate_word_impl(const Algebra<R>& a, const OperatorWord& w) {
    const int n = a.dim;
    const int nv = coordinate_count(n);
    Matrix<MultiPoly> result =
        Matrix<MultiPoly>::identity(n, MultiPoly::constant(nv, 1), MultiPoly(nv));
    for (const auto& letter : w) {
        const Matrix<MultiPoly> factor =
            (letter.side == OpSide::L) ? left_operator(a, letter.slot) : right_operator(a, letter.slot);
        result = result * factor;
    }
    return result;
}

template <class R>
Matrix<MultiPoly> evaluate_identity_impl(const Algebra<R>& a, const OperatorIdentity& t) {
    const int n = a.dim;
    const int nv = coordinate_count(n);
    Matrix<MultiPoly> acc(n, n, MultiPoly(nv));
    for (const auto& [c, w] : t.terms) acc = acc + evaluate_word_impl(a, w).scaled(MultiPoly::constant(nv, c));
    return acc;
}

}  // namespace

Matrix<MultiPoly> evaluate_word(const Algebra<Rational>& a, const OperatorWord& w) { return evaluate_word_impl(a, w); }
Matrix<MultiPoly> evaluate_word(const Algebra<UniPoly>& a, const OperatorWord& w) { return evaluate_word_impl(a, w); }

Matrix<MultiPoly> evaluate_identity(const Algebra<Rational>& a, const OperatorIdentity& t) {
    return evaluate_identity_impl(a, t);
}
Matrix<MultiPoly> evaluate_identity(const Algebra<UniPoly>& a, const OperatorIdentity& t) {
    return evaluate_identity_impl(a, t);
}

std::vector<OperatorIdentity> identity_basis(const Algebra<Rational>& a, const std::vector<OperatorWord>& words) {
    if (words.empty()) return {};
    const auto degree = multidegree(words.front());
    for (const auto& w : words)
        if (multidegree(w) != degree) throw MixedDegree();

    const int n = a.dim;
    std::vector<Matrix<MultiPoly>> evaluated;
    evaluated.reserve(words.size());
    for (const auto& w : words) evaluated.push_back(evaluate_word(a, w));

    // One linear equation per (matrix entry, monomial) pair.
    std::map<std::pair<int, MultiPoly::Exponents>, int> row_of;
    for (const auto& m : evaluated)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (const auto& [e, c] : m(i, j).terms()) {
                    const auto key = std::make_pair(i * n + j, e);
                    row_of.emplace(key, static_cast<int>(row_of.size()));
                }

    if (row_of.empty()) {
        // Every word evaluates to zero; all coefficient vectors qualify.
        std::vector<OperatorIdentity> basis;
        for (std::size_t k = 0; k < words.size(); ++k) {
            std::vector<Rational> coeffs(words.size(), Rational(0));
            coeffs[k] = 1;
            basis.push_back(make_identity(coeffs, words));
        }
        return basis;
    }

    Matrix<Rational> system(static_cast<int>(row_of.size()), static_cast<int>(words.size()), Rational(0));
    for (std::size_t col = 0; col < evaluated.size(); ++col)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (const auto& [e, c] : evaluated[col](i, j).terms())
                    system(row_of.at({i * n + j, e}), static_cast<int>(col)) = c;

    KernelResult k = kernel(system);
    std::vector<OperatorIdentity> basis;
    basis.reserve(k.basis.size());
    for (const auto& v : k.basis) basis.push_back(make_identity(v, words));
    return basis;
}

namespace {

HoldsResult analyze_residual(Matrix<MultiPoly> residual, int dim, bool parametric) {
    HoldsResult out;
    out.residual = std::move(residual);
    bool zero = true;
    for (int i = 0; i < out.residual.rows() && zero; ++i)
        for (int j = 0; j < out.residual.cols() && zero; ++j)
            if (!out.residual(i, j).is_zero()) zero = false;
    if (zero) {
        out.holds = true;
        return out;
    }
    out.holds = false;
    if (parametric) {
        UniPoly g;
        for (int i = 0; i < out.residual.rows(); ++i)
            for (int j = 0; j < out.residual.cols(); ++j)
                for (const auto& [e, coeff] : out.residual(i, j).collect(parameter_index(dim))) g = gcd(g, coeff);
        out.condition = g;
    }
    return out;
}

}  // namespace

HoldsResult holds(const Algebra<Rational>& b, const OperatorIdentity& t) {
    return analyze_residual(evaluate_identity(b, t), b.dim, false);
}

HoldsResult holds(const Algebra<UniPoly>& b, const OperatorIdentity& t) {
    return analyze_residual(evaluate_identity(b, t), b.dim, true);
}

TransferResult transfer_criterion(const Algebra<Rational>& a, const Algebra<Rational>& b,
                                  const std::vector<std::pair<int, int>>& degrees) {
    TransferResult out;
    for (const auto& degree : degrees) {
        const auto words = all_words(degree.first, degree.second);
        for (const auto& t : identity_basis(a, words)) {
            HoldsResult h = holds(b, t);
            if (!h.holds) {
                out.pass = false;
                out.degree = degree;
                out.witness_identity = t;
                out.residual = std::move(h.residual);
                return out;
            }
        }
    }
    return out;
}

}  // namespace prelie
