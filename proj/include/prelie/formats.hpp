#pragma once

/*
 * JSON file formats.
 *
 * Algebra files:
 *   { "dim": 2, "label": "B4", "parameter": "a",
 *     "products": [ {"i": 1, "j": 1, "k": 2, "c": "1"}, ... ] }
 * Omitted (i, j, k) triples are zero; coefficient strings are exact
 * rationals, or polynomials in the declared parameter.
 *
 * Witness files:
 *   { "dim": 2, "inverse_given": true,
 *     "entries": [["1", "0"], ["t^2", "t"]],
 *     "parameters": {"a": "-2"} }
 * Entries are rational functions in t; any other names must be bound under
 * "parameters".
 */

#include <prelie/degeneration.hpp>

#include <iosfwd>
#include <variant>

namespace prelie {

struct FileError : std::runtime_error {
    explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

struct AlgebraFile {
    int dim = 0;
    std::string label;
    std::optional<std::string> parameter;
    std::variant<Algebra<Rational>, Algebra<UniPoly>> algebra;

    bool parametric() const { return parameter.has_value(); }
    const Algebra<Rational>& concrete() const { return std::get<Algebra<Rational>>(algebra); }
    const Algebra<UniPoly>& symbolic() const { return std::get<Algebra<UniPoly>>(algebra); }
    /// Concrete structure constants; parametric files need a value.
    Algebra<Rational> instantiated(const std::optional<Rational>& param) const;
};

AlgebraFile parse_algebra_file(const std::string& json_text);
AlgebraFile read_algebra_file(const std::string& path);
std::string write_algebra_file(const Algebra<Rational>& a, const std::string& label);
std::string write_algebra_file(const Algebra<UniPoly>& a, const std::string& label, const std::string& parameter);

Witness parse_witness_file(const std::string& json_text);
Witness read_witness_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace prelie
