#pragma once

/*
 * Exact scalar substrate: arbitrary-precision integers and rationals.
 *
 * Rationals are kept in canonical form at all times (coprime numerator and
 * denominator, denominator positive, zero represented as 0/1); the
 * underlying boost type maintains this invariant for us.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>

namespace prelie {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_zero(const Rational& q) { return q.is_zero(); }

inline Rational rational(long num, long den = 1) { return Rational(num, den); }

/// Accepts "p", "-p" and "p/q"; q must be nonzero.
inline Rational rational_from_string(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace prelie
