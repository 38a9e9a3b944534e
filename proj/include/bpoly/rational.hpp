#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bpoly {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "a" or "a/b" with optional sign.
Rational parse_rational(std::string_view text);

// Always "num/den", denominator 1 included.
std::string rational_to_string(const Rational& r);

Integer binomial(long n, long k);
Integer factorial(long n);

}  // namespace bpoly
