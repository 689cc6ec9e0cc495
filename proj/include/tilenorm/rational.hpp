#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace tilenorm {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q", "-p/q" or an integer. Throws std::invalid_argument on junk
// or a zero denominator. Result is canonicalized.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integral(const Rational& q);

// Least common multiple of the denominators; 1 for an empty range.
Integer denominator_lcm(const std::vector<Rational>& values);

// Scales a non-zero vector to the primitive integer vector pointing the
// same way (positive multiple).
std::vector<Rational> primitive_direction(const std::vector<Rational>& v);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace tilenorm
