#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercalc/coefficient.hpp"
#include "hypercalc/context.hpp"
#include "hypercalc/rational.hpp"

namespace hypercalc {

struct Term {
    Rational exponent;
    Coefficient coeff;
};

/// Truncated Puiseux series in the canonical infinitesimal rho:
///
///     c1*rho^e1 + c2*rho^e2 + ... + O(rho^bound)
///
/// Exponents are strictly increasing, every exponent is below the bound, and
/// no stored coefficient is zero. A missing bound means the series is exact.
/// The empty exact series is the canonical zero; an empty series with a bound
/// is only known to be O(rho^bound).
class Series {
public:
    Series() = default;
    Series(std::vector<Term> terms, std::optional<Rational> bound);

    static Series zero() { return {}; }
    static Series constant(const Coefficient& c);
    static Series monomial(const Coefficient& c, const Rational& exponent);
    static Series rho() { return monomial(Coefficient(1), Rational(1)); }
    static Series big_o(const Rational& bound) { return Series({}, bound); }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    const std::optional<Rational>& bound() const noexcept { return bound_; }

    bool is_exact() const noexcept { return !bound_.has_value(); }
    bool is_exact_zero() const noexcept { return terms_.empty() && !bound_; }
    bool empty() const noexcept { return terms_.empty(); }
    const Term& leading() const;
    /// Leading exponent; the bound for an O-only series; nullopt for exact zero.
    std::optional<Rational> valuation() const;

    /// Coefficient of rho^e; InsufficientPrecision when e is not below the bound.
    Coefficient coefficient(const Rational& e) const;
    /// Sign of the value; InsufficientPrecision for an O-only series.
    int sign() const;

    Series truncated(const Rational& bound) const;
    /// Terms with exponent < e, as an exact series.
    Series below(const Rational& e) const;
    /// Terms with exponent > e together with the bound.
    Series above(const Rational& e) const;
    Series scaled(const Coefficient& c) const;
    /// Multiplies by rho^shift.
    Series shifted(const Rational& shift) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    /// Same terms (coefficient equality) and same bound.
    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// Text form "c1*d^e1 + c2*d^e2 + O(d^b)"; exponent 0 terms print as the
    /// bare coefficient and non-integer or negative exponents are parenthesized.
    std::string str(std::string_view symbol = "d") const;
    /// Inverse of str(); exact round trip for rational coefficients.
    static Series parse(std::string_view text, std::string_view symbol = "d");

private:
    std::vector<Term> terms_;
    std::optional<Rational> bound_;
};

using LCNumber = Series;

/// min over optional bounds where nullopt stands for +infinity.
std::optional<Rational> min_bound(const std::optional<Rational>& a, const std::optional<Rational>& b);

/// Spec-level constructors: embedded standard number, rho, and c*rho^e, each
/// carrying the context's order bound.
Series construct(const Rational& q, const Context& ctx);
Series construct_rho(const Context& ctx);
Series construct_term(const Coefficient& c, const Rational& e, const Context& ctx);

/// Sum_k a_k u^k for an infinitesimal u (positive valuation), truncated at
/// `target` unless u's own bound forces an earlier one.
Series compose_power_series(const std::function<Coefficient(unsigned)>& coefficient, const Series& u,
                            const Rational& target);

Series reciprocal(const Series& y, const Context& ctx);
Series divide(const Series& x, const Series& y, const Context& ctx);
Series pow_int(const Series& x, long n, const Context& ctx);
/// x^q for rational q via leading-term factorization and the binomial series.
Series pow_rational(const Series& x, const Rational& q, const Context& ctx);

/// Series for exp(u), ln(1+u), sin(u), cos(u) with u infinitesimal. All
/// coefficients are rational.
Series exp_infinitesimal(const Series& u, const Context& ctx);
Series log1p_infinitesimal(const Series& u, const Context& ctx);
Series sin_infinitesimal(const Series& u, const Context& ctx);
Series cos_infinitesimal(const Series& u, const Context& ctx);

}  // namespace hypercalc
