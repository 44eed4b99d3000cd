#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symvar {

/// Exact rational; GMP keeps it canonical (lowest terms, positive denominator)
/// as long as every constructed value goes through make_rational/parse_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);

/// Accepts "p", "p/q" and finite decimals such as "-0.25".
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const BigInt& z) { return sgn(z); }

BigInt binomial(long n, long k);
BigInt factorial(unsigned long n);

}  // namespace symvar
