#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace lagrangian {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses an exact rational from "p/q", an integer, or a finite decimal
/// literal such as "0.25" or "-1.5e-3". Throws InputError otherwise.
Rational parse_rational(std::string_view text);

/// Exact rational for the shortest decimal that round-trips `value`, so 0.1
/// becomes 1/10 rather than its binary expansion.
Rational rational_from_double(double value);

double to_double(const Rational& q);

/// "p/q", or just "p" for integers.
std::string to_string(const Rational& q);

Rational pow(const Rational& base, int exponent);

/// Smallest integer >= q.
Integer ceil(const Rational& q);

Integer factorial(int k);
Integer binomial_exact(int n, int k);

}  // namespace lagrangian
