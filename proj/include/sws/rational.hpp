#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace sws {

using Rational = boost::multiprecision::mpq_rational;

/// Parses "0.25", ".5", "1", or "3/4" into an exact rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Finite decimal when the denominator is 2^a 5^b, "n/d" otherwise.
/// parse_rational(format_rational(r)) == r.
std::string format_rational(const Rational& r);

/// Exact fraction followed by a 12-significant-digit decimal, e.g. "27/40 (0.675)".
std::string describe(const Rational& r);
std::string describe(double r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double r) { return r; }

/// Arithmetic glue so solvers can be written once over an exact or a
/// floating scalar.
template <class Scalar>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static Rational from_rational(const Rational& r) { return r; }
    static bool ties(const Rational& a, const Rational& b, double /*tol*/) { return a == b; }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static double from_rational(const Rational& r) { return to_double(r); }
    static bool ties(double a, double b, double tol) { return std::abs(a - b) <= tol; }
};

}  // namespace sws
