#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pda {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); 0 when k < 0 or k > n. Exact for any size.
BigInt binomial(std::int64_t n, std::int64_t k);

// base^exp for exp >= 0.
BigInt ipow(std::int64_t base, std::int64_t exp);

double to_double(const BigInt& v);
double to_double(const Rational& r);

// "p/q" reduced; just "p" when the reduced denominator is 1.
std::string ratio_string(const Rational& r);

// Fixed-point rendering with `digits` decimals, round half up. digits >= 1.
std::string fixed_string(const Rational& r, int digits);

// Exact decimal when the reduced denominator is 2^a*5^b ("0.5", "2"),
// otherwise falls back to ratio_string ("1/3").
std::string compact_string(const Rational& r);

// Parses "p" or "p/q" (optional surrounding spaces) into an exact rational.
// Throws ParseError on malformed text or a zero denominator.
Rational parse_ratio(const std::string& text);

}  // namespace pda
