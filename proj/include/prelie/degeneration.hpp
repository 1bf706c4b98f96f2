#pragma once

/*
 * Degenerations: the base-change action over rational functions in t,
 * limits at t = 0, witness verification, the battery of necessary
 * criteria, and Hasse diagram construction.
 *
 * A degeneration A -> B is witnessed by an invertible matrix h over the
 * rational functions in t: express the product of A in the moving basis
 * f_i = h e_i and let t -> 0. Witness files may store h directly
 * (inverse_given = true, matching how such matrices are usually presented)
 * or its inverse.
 *
 * The criteria battery is sound but not complete: RuledOut verdicts carry
 * the violated criteria, Verified needs an explicit witness, and anything
 * else stays Undetermined.
 */

#include <prelie/algebra.hpp>
#include <prelie/derivations.hpp>
#include <prelie/identities.hpp>
#include <prelie/traceinv.hpp>

#include <optional>
#include <set>

namespace prelie {

struct InconsistentInput : std::logic_error {
    explicit InconsistentInput(const std::string& what) : std::logic_error(what) {}
};

struct Witness {
    Matrix<RatFunc> mat;
    bool inverse_given = true;
};

/// The matrix h whose columns are the moving basis; inverts stored data
/// when inverse_given is false. Throws SingularMatrix.
Matrix<RatFunc> basis_change(const Witness& w);

Witness scaling_witness(int dim);

Algebra<RatFunc> act(const Algebra<Rational>& a, const Witness& w);
Algebra<RatFunc> act(const Algebra<RatFunc>& a, const Witness& w);

/// Componentwise limit at t = 0 of all structure constants; nullopt when
/// any component has a pole.
std::optional<Algebra<Rational>> limit(const Algebra<RatFunc>& a);

/// True iff limit(act(a, w)) equals b's structure constants exactly.
bool verify_witness(const Algebra<Rational>& a, const Algebra<Rational>& b, const Witness& w);

struct CriteriaConfig {
    std::vector<DerivationWeights> weights = default_weight_samples();
    std::vector<std::pair<int, int>> word_degrees = {{1, 0}, {0, 1}, {1, 1}};
    int max_i = 4;
    int max_j = 4;
};

enum class Criterion {
    OrbitDim,
    LeftAnnihilator,
    RightAnnihilator,
    Center,
    GeneralizedDerivations,
    IdentityTransfer,
    TraceInvariant,
    Commutativity,
};

std::string criterion_name(Criterion c);

struct Reason {
    Criterion criterion;
    std::string detail;
    // Structured payloads (meaningful per criterion):
    int i = 0, j = 0;        // TraceInvariant order
    Rational lhs, rhs;       // compared values / dimensions
    DerivationWeights weights{};              // GeneralizedDerivations
    std::optional<OperatorIdentity> identity; // IdentityTransfer
    Matrix<MultiPoly> residual;               // IdentityTransfer
};

struct Verdict {
    enum class State { Verified, RuledOut, Undetermined } state = State::Undetermined;
    std::vector<Reason> reasons;          // all violated criteria, in battery order
    std::optional<Witness> witness;       // for Verified
};

/// Everything the criteria need to know about one algebra, computed once;
/// pairwise verdicts then reduce to comparisons and cheap linear algebra.
struct AlgebraProfile {
    Algebra<Rational> algebra;
    int orbit_dimension = 0;
    int left_ann_dim = 0, right_ann_dim = 0, center_dim = 0;
    bool commutative = false;
    std::vector<int> weighted_der_dims;  // parallel to config.weights
    struct DegreeData {
        std::vector<OperatorWord> words;
        std::vector<Matrix<MultiPoly>> evaluated;   // one matrix per word
        std::vector<OperatorIdentity> identities;   // basis of the identity space
    };
    std::vector<DegreeData> degrees;  // parallel to config.word_degrees
    std::vector<CInvariant> c_table;  // row-major, max_i x max_j
};

AlgebraProfile make_profile(const Algebra<Rational>& a, const CriteriaConfig& config = {});

/// Runs the necessary criteria in order, collecting every failure. With no
/// failures the pair is Verified when a verifying witness is supplied and
/// Undetermined otherwise.
Verdict criteria_battery(const AlgebraProfile& a, const AlgebraProfile& b, const CriteriaConfig& config = {},
                         const std::optional<Witness>& known_witness = std::nullopt);
Verdict criteria_battery(const Algebra<Rational>& a, const Algebra<Rational>& b, const CriteriaConfig& config = {},
                         const std::optional<Witness>& known_witness = std::nullopt);

struct LabeledAlgebra {
    std::string label;
    Algebra<Rational> algebra;
};

struct LabeledWitness {
    std::string source, target;
    Witness witness;
};

struct HasseNode {
    std::string label;
    int orbit_dimension = 0;
};

struct HasseGraph {
    std::vector<HasseNode> nodes;
    /// Proper-degeneration reachability: verified witnesses closed under
    /// composition (index pairs, source -> target).
    std::set<std::pair<int, int>> relation;
    /// Relation edges not implied by composing two relation edges.
    std::vector<std::pair<int, int>> covering_edges;
};

/// Verifies every witness, computes pairwise verdicts, cross-checks them
/// for consistency, and reduces the reachability relation to covering
/// edges. Throws std::invalid_argument for a witness that does not verify
/// and InconsistentInput when a verified pair is also ruled out.
HasseGraph build_hasse(const std::vector<LabeledAlgebra>& algebras, const std::vector<LabeledWitness>& witnesses,
                       const CriteriaConfig& config = {});

/// Consistency check split out for testability: every verified pair must
/// be free of criterion failures.
void check_verdict_consistency(const std::set<std::pair<int, int>>& verified,
                               const std::vector<std::vector<const Verdict*>>& verdicts,
                               const std::vector<HasseNode>& nodes);

/// Deterministic DOT rendering: one digraph, nodes ranked by orbit
/// dimension (highest on top), covering edges only, catalog node order.
std::string to_dot(const HasseGraph& g, const std::string& name = "degenerations");

}  // namespace prelie
