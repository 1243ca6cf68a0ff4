#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace blotto {

// Arbitrary-precision rational; every intermediate result of the reduction
// pipeline is stored in this type so that zero tests are exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Accepts "p/q", integer strings, and plain decimals ("-1.25" -> -5/4).
// Throws std::invalid_argument on anything else.
Rational rational_from_string(const std::string& text);

// Exact value of the double (every finite double is a dyadic rational).
Rational rational_from_double(double x);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

}  // namespace blotto
