#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace symstab {

// All coefficients in this project are exact rationals.  Filtration lifts
// divide by (n-i)!*(n-k+1) and isotypic projections divide by n!, so
// fixed-width arithmetic is not an option.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const BigInt& x) { return x.str(); }

// "p/q" in lowest terms, or just "p" for integers.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

BigInt factorial(int n);

// C(n,k); zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

}  // namespace symstab
