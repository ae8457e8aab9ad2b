#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace parthom {

// GMP keeps mpq_class canonical after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p", "p/q" and "-p/q"; throws ParseError on anything else or q = 0.
Rational parse_rational(std::string_view text);

// "p" for integers, otherwise "p/q".
std::string to_string(const Rational& q);

// Fixed-point rendering truncated toward zero after `digits` places.
std::string to_decimal(const Rational& q, unsigned digits);

Rational power(const Rational& base, std::size_t exponent);

}  // namespace parthom
