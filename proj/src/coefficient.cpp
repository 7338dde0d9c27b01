#include "hypercalc/coefficient.hpp"

#include <map>

#include "hypercalc/error.hpp"

namespace hypercalc {

namespace mp = boost::multiprecision;

void Context::validate() const {
    if (order < 2) fail(ErrorKind::InvalidArgument, "order bound must be at least 2, got " + to_string(order));
    if (digits < 16) fail(ErrorKind::InvalidArgument, "decimal digits must be at least 16, got " + std::to_string(digits));
}

const Decimal& decimal_tolerance(unsigned digits) {
    thread_local std::map<unsigned, Decimal> cache;
    auto it = cache.find(digits);
    if (it == cache.end()) {
        Decimal ten(10, digits);
        int exponent = -(static_cast<int>(digits) - 10);
        it = cache.emplace(digits, Decimal(mp::pow(ten, exponent), digits)).first;
    }
    return it->second;
}

Coefficient Coefficient::decimal(const Rational& q, unsigned digits) {
    return Coefficient(Tag{}, Decimal(q, digits));
}

const Rational& Coefficient::exact() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return *q;
    fail(ErrorKind::IrrationalCoefficient, "coefficient " + str() + " is not an exact rational");
}

Decimal Coefficient::to_decimal(unsigned digits) const {
    if (const auto* q = std::get_if<Rational>(&value_)) return Decimal(*q, digits);
    const auto& d = std::get<Decimal>(value_);
    return Decimal(d, digits);
}

unsigned Coefficient::digits() const {
    if (is_exact()) return 0;
    return std::get<Decimal>(value_).precision();
}

int Coefficient::sign() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return q->sign();
    const auto& d = std::get<Decimal>(value_);
    if (mp::abs(d) < decimal_tolerance(d.precision())) return 0;
    return d.sign();
}

bool Coefficient::is_one() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return *q == 1;
    return (*this - Coefficient(1)).is_zero();
}

Coefficient Coefficient::operator-() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return Coefficient(Rational(-*q));
    return Coefficient(Tag{}, Decimal(-std::get<Decimal>(value_)));
}

namespace {

unsigned joint_digits(const Coefficient& a, const Coefficient& b) { return std::max(a.digits(), b.digits()); }

}  // namespace

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
    if (a.is_exact() && b.is_exact()) return Coefficient(Rational(a.exact() + b.exact()));
    unsigned d = joint_digits(a, b);
    return Coefficient::decimal(Decimal(a.to_decimal(d) + b.to_decimal(d)));
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) {
    if (a.is_exact() && b.is_exact()) return Coefficient(Rational(a.exact() - b.exact()));
    unsigned d = joint_digits(a, b);
    return Coefficient::decimal(Decimal(a.to_decimal(d) - b.to_decimal(d)));
}

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
    if (a.is_exact() && b.is_exact()) return Coefficient(Rational(a.exact() * b.exact()));
    unsigned d = joint_digits(a, b);
    return Coefficient::decimal(Decimal(a.to_decimal(d) * b.to_decimal(d)));
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division of " + a.str() + " by zero");
    if (a.is_exact() && b.is_exact()) return Coefficient(Rational(a.exact() / b.exact()));
    unsigned d = joint_digits(a, b);
    return Coefficient::decimal(Decimal(a.to_decimal(d) / b.to_decimal(d)));
}

std::string Coefficient::str() const {
    if (const auto* q = std::get_if<Rational>(&value_)) return q->str();
    if (is_zero()) return "0";
    const auto& d = std::get<Decimal>(value_);
    return d.str(static_cast<std::streamsize>(d.precision()));
}

namespace {

[[noreturn]] void irrational(const char* fn, const Coefficient& c) {
    fail(ErrorKind::IrrationalCoefficient,
         std::string(fn) + "(" + c.str() + ") is not rational; use the decimal backend");
}

Decimal decimal_of(const Coefficient& c, const Context& ctx) {
    return c.to_decimal(std::max(ctx.digits, c.digits()));
}

}  // namespace

Coefficient exp(const Coefficient& c, const Context& ctx) {
    if (c.is_exact() && c.is_zero()) return Coefficient(1);
    if (ctx.backend == Backend::Exact && c.is_exact()) irrational("exp", c);
    return Coefficient::decimal(Decimal(mp::exp(decimal_of(c, ctx))));
}

Coefficient ln(const Coefficient& c, const Context& ctx) {
    if (c.sign() <= 0) fail(ErrorKind::DomainError, "ln of non-positive number " + c.str());
    if (c.is_exact() && c.exact() == 1) return Coefficient(0);
    if (ctx.backend == Backend::Exact && c.is_exact()) irrational("ln", c);
    return Coefficient::decimal(Decimal(mp::log(decimal_of(c, ctx))));
}

Coefficient sin(const Coefficient& c, const Context& ctx) {
    if (c.is_exact() && c.is_zero()) return Coefficient(0);
    if (ctx.backend == Backend::Exact && c.is_exact()) irrational("sin", c);
    return Coefficient::decimal(Decimal(mp::sin(decimal_of(c, ctx))));
}

Coefficient cos(const Coefficient& c, const Context& ctx) {
    if (c.is_exact() && c.is_zero()) return Coefficient(1);
    if (ctx.backend == Backend::Exact && c.is_exact()) irrational("cos", c);
    return Coefficient::decimal(Decimal(mp::cos(decimal_of(c, ctx))));
}

Coefficient pow(const Coefficient& c, const Rational& q, const Context& ctx) {
    const Integer num = mp::numerator(q);
    const Integer den = mp::denominator(q);
    if (c.is_zero()) {
        if (q < 0) fail(ErrorKind::DivisionByZero, "zero raised to negative power " + to_string(q));
        return q == 0 ? Coefficient(1) : Coefficient(0);
    }
    const bool odd_den = den % 2 != 0;
    if (c.sign() < 0 && !odd_den) {
        fail(ErrorKind::NegativeBase, "even root of negative number " + c.str());
    }
    if (c.is_exact()) {
        if (den == 1) return Coefficient(pow(c.exact(), num.convert_to<long>()));
        if (auto root = exact_root(c.exact(), den.convert_to<unsigned>())) {
            return Coefficient(pow(*root, num.convert_to<long>()));
        }
        if (ctx.backend == Backend::Exact) {
            fail(ErrorKind::IrrationalCoefficient,
                 c.str() + "^(" + to_string(q) + ") is not rational; use the decimal backend");
        }
    }
    // Real root of a negative base with odd denominator: sign follows the numerator.
    Decimal magnitude = mp::pow(mp::abs(decimal_of(c, ctx)), Decimal(q, std::max(ctx.digits, c.digits())));
    bool negative = c.sign() < 0 && num % 2 != 0;
    return Coefficient::decimal(negative ? Decimal(-magnitude) : magnitude);
}

}  // namespace hypercalc
