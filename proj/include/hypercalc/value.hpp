#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypercalc/series.hpp"

namespace hypercalc {

/// Finite sum  S_0 + S_1*L + S_k*L^k + ...  where L = ln(1/rho) is a positive
/// infinite number below every negative power of rho. Keys are the (rational)
/// powers of L; exactly-zero parts are never stored.
class LogSeries {
public:
    struct Monomial {
        Coefficient coeff;
        Rational exponent;  // power of rho
        Rational log_power;
    };

    LogSeries() = default;
    explicit LogSeries(Series s);
    explicit LogSeries(std::map<Rational, Series> parts);
    static LogSeries log_power(const Rational& k, Series s);

    const std::map<Rational, Series>& parts() const noexcept { return parts_; }
    bool is_exact_zero() const noexcept { return parts_.empty(); }
    /// True when no power of L other than L^0 occurs.
    bool is_series() const;
    Series part(const Rational& k) const;

    /// Largest monomial by magnitude (smallest rho exponent, then largest L
    /// power), ignoring big-O parts; nullopt when there are no terms.
    std::optional<Monomial> dominant() const;
    /// Sign of the dominant monomial, 0 for an exact zero.
    int dominant_sign() const;
    /// Smallest rho exponent over terms and bounds.
    std::optional<Rational> valuation() const;
    std::optional<Rational> bound() const;
    bool is_exact() const;

    LogSeries scaled(const Coefficient& c) const;
    LogSeries shifted(const Rational& rho_shift) const;
    LogSeries truncated(const Rational& bound) const;

    LogSeries operator-() const;
    friend LogSeries operator+(const LogSeries& a, const LogSeries& b);
    friend LogSeries operator-(const LogSeries& a, const LogSeries& b) { return a + (-b); }
    friend LogSeries operator*(const LogSeries& a, const LogSeries& b);
    LogSeries& operator+=(const LogSeries& o) { return *this = *this + o; }
    friend bool operator==(const LogSeries& a, const LogSeries& b) { return a.parts_ == b.parts_; }

    std::string str(std::string_view symbol = "d") const;

private:
    void normalize();
    std::map<Rational, Series> parts_;
};

/// Power series sum_k a_k u^k for u with positive rho-valuation.
LogSeries compose_power_series(const std::function<Coefficient(unsigned)>& coefficient, const LogSeries& u,
                               const Rational& target);

enum class Wave { None, Sin, Cos };

/// exp(growth) * wave(phase). `growth` and `phase` are purely infinite and
/// exact; a phase's dominant coefficient is positive.
struct Atom {
    LogSeries growth;
    Wave wave = Wave::None;
    LogSeries phase;

    bool trivial() const { return growth.is_exact_zero() && wave == Wave::None; }
    friend bool operator==(const Atom& a, const Atom& b) {
        return a.wave == b.wave && a.growth == b.growth && a.phase == b.phase;
    }
};

struct Component {
    Atom atom;
    LogSeries amplitude;
};

/// A value of the extended model: either a plain series or a sum of
/// amplitude * exp(growth) * wave(phase) components for quantities that leave
/// the rho-power scale (e^(1/rho), ln rho, sin(1/rho), rho^(1/rho), ...).
class Value {
public:
    Value() = default;
    Value(Series s) : repr_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
    explicit Value(LogSeries s);
    explicit Value(std::vector<Component> components);

    bool is_series() const noexcept { return std::holds_alternative<Series>(repr_); }
    const Series& series() const;
    std::vector<Component> components() const;
    /// The value as a single L-power sum, or nullopt if it has growth or waves.
    std::optional<LogSeries> log_series() const;

    std::string str(std::string_view symbol = "d") const;

    friend bool operator==(const Value& a, const Value& b);

private:
    std::variant<Series, std::vector<Component>> repr_;
};

using LCValue = Value;

Value operator-(const Value& a);
Value operator+(const Value& a, const Value& b);
Value operator-(const Value& a, const Value& b);
Value operator*(const Value& a, const Value& b);
Value reciprocal(const Value& a, const Context& ctx);
Value divide(const Value& a, const Value& b, const Context& ctx);
Value pow_rational(const Value& a, const Rational& q, const Context& ctx);

enum class ArithOp { Add, Sub, Mul, Div };
Value arith(ArithOp op, const Value& a, const Value& b, const Context& ctx);

enum class Category { Zero, Infinitesimal, Appreciable, Infinite };
enum class Sign { Negative, Zero, Positive, Unknown };

struct NumberClass {
    Category category;
    Sign sign;
    std::string str() const;
    friend bool operator==(const NumberClass&, const NumberClass&) = default;
};

enum class Magnitude {
    Zero,
    SubPolyInfinitesimal,
    PolyInfinitesimal,
    LogInfinitesimal,
    Appreciable,
    BoundedOscillation,
    SubPolyInfinite,
    PolyInfinite,
    SuperPolyInfinite,
};

std::string_view to_string(Magnitude m);

struct Analysis {
    Category category = Category::Zero;
    Sign sign = Sign::Unknown;
    Magnitude magnitude = Magnitude::Zero;
    /// False when the top scale carries oscillation or only a big-O term.
    bool determinate = true;
    /// Standard part of a finite, non-oscillating value.
    Coefficient standard;
    /// Range of an appreciable oscillation.
    Coefficient low, high;
};

/// Reads off the dominant scale. Throws InsufficientPrecision when that scale
/// is only known as a big-O term and is not infinitesimal, and Undecidable when
/// an oscillation dominates at an infinite scale.
Analysis analyze(const Value& x);

/// Classification; Undecidable for an appreciable oscillation whose range
/// contains 0.
NumberClass classify(const Value& x);

struct ExtReal {
    enum class Kind { Finite, PlusInfinity, MinusInfinity };
    Kind kind = Kind::Finite;
    Coefficient value;

    static ExtReal finite(Coefficient c) { return {Kind::Finite, std::move(c)}; }
    static ExtReal plus_infinity() { return {Kind::PlusInfinity, {}}; }
    static ExtReal minus_infinity() { return {Kind::MinusInfinity, {}}; }
    bool is_finite() const { return kind == Kind::Finite; }
    std::string str() const;
    friend bool operator==(const ExtReal& a, const ExtReal& b) {
        return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
    }
};

/// st(x); Undefined for a bounded oscillation.
ExtReal standard_part(const Value& x);

/// x - y is zero or infinitesimal.
bool approx(const Value& x, const Value& y);

enum class Ordering { Less, Equal, Greater };
Ordering compare(const Value& x, const Value& y);
std::string_view to_string(Ordering o);

}  // namespace hypercalc
