#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace convexity {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using RationalVector = std::vector<Rational>;

/// 50-digit decimal float; only used where a value is irrational.
using Real = boost::multiprecision::cpp_dec_float_50;

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws ParseError.
Rational parse_rational(const std::string& text);

/// Decimal rendering with `digits` significant digits.
std::string to_string(const Real& x, int digits);

}  // namespace convexity
