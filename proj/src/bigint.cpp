#include "powg/bigint.hpp"

#include "powg/errors.hpp"

#include <algorithm>

namespace powg {

BigInt binomial(long long n, long long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt exact_div(const BigInt& num, const BigInt& den, const std::string& what)
{
    if (den == 0)
        throw FormulaError{what + ": division by zero"};
    BigInt quotient, remainder;
    boost::multiprecision::divide_qr(num, den, quotient, remainder);
    if (remainder != 0)
        throw FormulaError{what + ": " + to_string(num) + " is not divisible by " + to_string(den)};
    return quotient;
}

std::string to_string(const BigInt& value)
{
    return value.str();
}

std::string to_string(const Rational& value)
{
    auto num = boost::multiprecision::numerator(value);
    auto den = boost::multiprecision::denominator(value);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

BigPoly poly_add(const BigPoly& a, const BigPoly& b)
{
    const BigPoly& longer = a.size() >= b.size() ? a : b;
    const BigPoly& shorter = a.size() >= b.size() ? b : a;
    BigPoly out = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i)
        out[i] += shorter[i];
    return out;
}

BigPoly poly_mul(const BigPoly& a, const BigPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    BigPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace powg
