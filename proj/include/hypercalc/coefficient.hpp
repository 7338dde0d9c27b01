#pragma once

#include <string>
#include <type_traits>
#include <variant>

#include <boost/multiprecision/mpfr.hpp>

#include "hypercalc/context.hpp"
#include "hypercalc/rational.hpp"

namespace hypercalc {

using Decimal = boost::multiprecision::mpfr_float;

/// A standard real number: either an exact rational or a decimal carried at a
/// fixed number of significant digits.
///
/// Mixed arithmetic promotes to decimal. Two decimals are equal when their
/// difference is below 10^-(digits-10); a decimal below that threshold is zero.
class Coefficient {
public:
    Coefficient() : value_(Rational(0)) {}
    Coefficient(Rational q) : value_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
    template <typename Int, typename = std::enable_if_t<std::is_integral_v<Int>>>
    Coefficient(Int v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)

    static Coefficient decimal(const Decimal& d) { return Coefficient(Tag{}, d); }
    static Coefficient decimal(const Rational& q, unsigned digits);

    bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
    const Rational& exact() const;
    Decimal to_decimal(unsigned digits) const;
    /// Significant digits of a decimal coefficient, 0 for exact ones.
    unsigned digits() const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    bool is_one() const;
    Coefficient abs() const { return sign() < 0 ? -*this : *this; }

    Coefficient operator-() const;
    friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
    friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
    Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
    Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
    Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

    friend bool operator==(const Coefficient& a, const Coefficient& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }
    friend bool operator<(const Coefficient& a, const Coefficient& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Coefficient& a, const Coefficient& b) { return b < a; }
    friend bool operator<=(const Coefficient& a, const Coefficient& b) { return !(b < a); }
    friend bool operator>=(const Coefficient& a, const Coefficient& b) { return !(a < b); }

    /// Exact: reduced fraction. Decimal: significant digits in scientific or
    /// fixed notation as produced by MPFR.
    std::string str() const;

    /// Absolute distance, as a decimal when either side is decimal.
    friend Coefficient distance(const Coefficient& a, const Coefficient& b) { return (a - b).abs(); }

private:
    struct Tag {};
    Coefficient(Tag, Decimal d) : value_(std::move(d)) {}

    std::variant<Rational, Decimal> value_;
};

/// Smallest magnitude a decimal carried at `digits` digits may have and
/// still count as nonzero.
const Decimal& decimal_tolerance(unsigned digits);

/// Transcendental and algebraic values of standard numbers. In the exact
/// backend these succeed only when the result is rational (exp(0), ln(1),
/// sin(0), perfect roots, ...) and raise IrrationalCoefficient otherwise.
Coefficient exp(const Coefficient& c, const Context& ctx);
Coefficient ln(const Coefficient& c, const Context& ctx);
Coefficient sin(const Coefficient& c, const Context& ctx);
Coefficient cos(const Coefficient& c, const Context& ctx);
/// Real power c^q; NegativeBase for even roots of negatives.
Coefficient pow(const Coefficient& c, const Rational& q, const Context& ctx);

}  // namespace hypercalc
