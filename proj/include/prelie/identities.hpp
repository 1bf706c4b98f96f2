#pragma once

/*
 * Polynomial operator identities in the generic left and right
 * multiplication operators L(x), L(y), R(x), R(y).
 *
 * An operator word is a composition of such operators; an identity is a
 * rational linear combination of words of one multidegree that evaluates
 * to the zero matrix identically in the generic coordinates. Identities
 * satisfied by an algebra are satisfied by everything in its orbit closure,
 * which yields a necessary degeneration criterion: if some identity of A
 * fails on B, then A cannot degenerate to B.
 */

#include <prelie/algebra.hpp>

#include <optional>
#include <utility>

namespace prelie {

struct MixedDegree : std::invalid_argument {
    MixedDegree() : std::invalid_argument("operator words of mixed multidegree") {}
};

enum class OpSide { L, R };

struct OpLetter {
    OpSide side;
    Slot slot;
    auto operator<=>(const OpLetter&) const = default;
};

using OperatorWord = std::vector<OpLetter>;

/// (#x-slot letters, #y-slot letters).
std::pair<int, int> multidegree(const OperatorWord& w);

/// All words with the given multidegree, in a fixed lexicographic order
/// (letter order Lx < Ly < Rx < Ry). The empty degree gives the unit word.
std::vector<OperatorWord> all_words(int deg_x, int deg_y);

std::string word_to_string(const OperatorWord& w);  // "Lx.Ry"; unit word is "1"
OperatorWord word_from_string(const std::string& s);

struct OperatorIdentity {
    std::vector<std::pair<Rational, OperatorWord>> terms;  // nonzero coefficients, distinct words
    std::string to_string() const;
};

/// Build an identity from parallel coefficient/word lists, dropping zeros.
OperatorIdentity make_identity(const std::vector<Rational>& coeffs, const std::vector<OperatorWord>& words);

/// Product of the operator matrices named by the word, with symbolic
/// coordinates; the unit word gives the identity matrix.
Matrix<MultiPoly> evaluate_word(const Algebra<Rational>& a, const OperatorWord& w);
Matrix<MultiPoly> evaluate_word(const Algebra<UniPoly>& a, const OperatorWord& w);

Matrix<MultiPoly> evaluate_identity(const Algebra<Rational>& a, const OperatorIdentity& t);
Matrix<MultiPoly> evaluate_identity(const Algebra<UniPoly>& a, const OperatorIdentity& t);

/// Basis of the space of coefficient vectors whose word combination
/// vanishes identically, as an exact kernel computation. All words must
/// share one multidegree.
std::vector<OperatorIdentity> identity_basis(const Algebra<Rational>& a, const std::vector<OperatorWord>& words);

struct HoldsResult {
    bool holds = false;
    /// For parametric algebras that do not satisfy the identity outright:
    /// monic gcd of all residual coefficients as a polynomial in the
    /// parameter; its roots are exactly the parameter values where the
    /// identity holds (a constant gcd means no value works).
    std::optional<UniPoly> condition;
    Matrix<MultiPoly> residual;
};

HoldsResult holds(const Algebra<Rational>& b, const OperatorIdentity& t);
HoldsResult holds(const Algebra<UniPoly>& b, const OperatorIdentity& t);

struct TransferResult {
    bool pass = true;
    std::pair<int, int> degree{0, 0};
    std::optional<OperatorIdentity> witness_identity;  // an identity of A failing on B
    Matrix<MultiPoly> residual;
};

/// Necessary criterion: every identity of A must hold on B, or A cannot
/// degenerate to B.
TransferResult transfer_criterion(const Algebra<Rational>& a, const Algebra<Rational>& b,
                                  const std::vector<std::pair<int, int>>& degrees);

}  // namespace prelie
