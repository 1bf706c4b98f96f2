#pragma once

/*
 * Parser for the coefficient expression language used by the file formats:
 * integers, named variables, +, -, *, /, ^ with integer exponents, and
 * parentheses. Expressions evaluate exactly over univariate rational
 * functions; which names are in scope (and what they mean) is supplied by
 * the caller.
 */

#include <prelie/ratfunc.hpp>

#include <map>
#include <string>

namespace prelie {

struct ParseError : std::runtime_error {
    int position;  // 0-based offset into the input text
    ParseError(const std::string& message, int pos)
        : std::runtime_error(message + " at position " + std::to_string(pos)), position(pos) {}
};

using ParseEnv = std::map<std::string, RatFunc>;

RatFunc parse_expression(const std::string& text, const ParseEnv& env);

/// No variables in scope; the result must be a plain rational.
Rational parse_rational(const std::string& text);

/// One variable in scope; the result must be polynomial in it.
UniPoly parse_parameter_poly(const std::string& text, const std::string& param);

}  // namespace prelie
