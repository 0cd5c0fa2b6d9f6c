#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace powg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Polynomial coefficients, index = exponent.
using BigPoly = std::vector<BigInt>;

/// Binomial coefficient C(n, k); zero when k < 0, n < 0 or k > n.
BigInt binomial(long long n, long long k);

/// num / den, throwing FormulaError if the division leaves a remainder.
/// `what` names the quantity in the error message.
BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what);

/// Decimal rendering of an integer or rational ("a/b" when not integral).
std::string to_string(const BigInt& value);
std::string to_string(const Rational& value);

/// Truncating sum of two polynomials.
BigPoly poly_add(const BigPoly& a, const BigPoly& b);
/// Product of two polynomials.
BigPoly poly_mul(const BigPoly& a, const BigPoly& b);

}  // namespace powg
