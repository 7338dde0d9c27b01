#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace hypercalc {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Accepts "7", "-3/4", "0.25", "-1.5"; decimals are converted exactly.
Rational parse_rational(std::string_view text);

/// Reduced "p" or "p/q".
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// Largest integer r with r^n == value, if value is a perfect n-th power.
std::optional<Integer> exact_root(const Integer& value, unsigned n);

/// q^(1/n) when both numerator and denominator are perfect n-th powers.
/// Negative q is only accepted for odd n.
std::optional<Rational> exact_root(const Rational& q, unsigned n);

Rational pow(const Rational& base, long exponent);

Rational factorial(unsigned k);

}  // namespace hypercalc
