#pragma once

/*
 * Built-in catalog: the classification of complex pre-Lie algebras in
 * dimensions 1 and 2 by structure constants, the expected invariant values
 * for each entry, and an explicit degeneration witness for every proper
 * orbit-closure inclusion among them.
 *
 * One-parameter families are stored with coefficients polynomial in a
 * formal parameter and instantiated on demand. B2(0) is excluded because
 * it is isomorphic to B1(0).
 */

#include <prelie/degeneration.hpp>

#include <functional>

namespace prelie {
namespace catalog {

struct UnknownLabel : std::invalid_argument {
    explicit UnknownLabel(const std::string& label) : std::invalid_argument("unknown catalog label: " + label) {}
};

struct ForbiddenParameter : std::invalid_argument {
    explicit ForbiddenParameter(const std::string& what) : std::invalid_argument(what) {}
};

struct Entry {
    std::string label;
    int dim = 0;
    bool parametric = false;
    Algebra<UniPoly> structure;  // parameter = polynomial variable

    // Expected values (themselves under test):
    int der_dim = 0;                                  // generic parameter
    std::optional<std::pair<Rational, int>> der_dim_special;  // (parameter value, dim)
    bool commutative = false;
    bool associative = false;                         // at the generic parameter
    std::optional<Rational> associative_at;           // special parameter value
    bool novikov = false;
    std::optional<Rational> novikov_at;
    bool lie_abelian = false;

    int expected_der_dim(const std::optional<Rational>& param) const;
    bool expected_associative(const std::optional<Rational>& param) const;
    bool expected_novikov(const std::optional<Rational>& param) const;
};

const std::vector<Entry>& entries();
const Entry& entry(const std::string& label);
bool has_label(const std::string& label);

/// Structure constants of a catalog entry; families require a parameter
/// (B2 rejects 0), non-parametric entries reject one.
Algebra<Rational> load(const std::string& label, const std::optional<Rational>& param = std::nullopt);
Algebra<UniPoly> load_symbolic(const std::string& label);

/// "B1(-1/2)" etc. for family members, the bare label otherwise.
std::string display_label(const std::string& label, const std::optional<Rational>& param = std::nullopt);

struct WitnessSpec {
    std::string source, target;
    bool source_parametric = false;
    std::optional<Rational> target_param;
    /// Builds the witness; for parametric sources the argument is the
    /// family parameter (validity per `valid`), otherwise it is ignored.
    std::function<Witness(const Rational&)> make;
    std::function<bool(const Rational&)> valid = [](const Rational&) { return true; };
};

/// The direct degeneration witnesses between distinct catalog entries
/// (the universal scaling witness onto the zero algebra is separate).
const std::vector<WitnessSpec>& witness_specs();

/// Family parameter representatives used for catalog-wide tests.
const std::vector<Rational>& b1_parameters();
const std::vector<Rational>& b2_parameters();

struct Node {
    std::string label;                   // display label
    std::string family;                  // catalog label
    std::optional<Rational> param;
    Algebra<Rational> algebra;
};

/// Instantiated node sets for the Hasse diagrams.
std::vector<Node> dim2_nodes();
std::vector<Node> dim2_novikov_nodes();
std::vector<Node> dim1_nodes();

/// All verified witnesses among the given nodes: the direct witnesses
/// instantiated per representative plus scaling edges onto the zero
/// algebra.
std::vector<LabeledWitness> witnesses_for(const std::vector<Node>& nodes);

}  // namespace catalog
}  // namespace prelie
