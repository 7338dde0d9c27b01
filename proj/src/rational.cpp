#include "hypercalc/rational.hpp"

#include <cctype>

#include "hypercalc/error.hpp"

namespace hypercalc {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
        case ErrorKind::NegativeBase: return "NegativeBase";
        case ErrorKind::IrrationalCoefficient: return "IrrationalCoefficient";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::UnsupportedEscape: return "UnsupportedEscape";
        case ErrorKind::Undefined: return "Undefined";
        case ErrorKind::Undecidable: return "Undecidable";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
        case ErrorKind::EmptyInterval: return "EmptyInterval";
        case ErrorKind::NotAFilter: return "NotAFilter";
        case ErrorKind::NotDisjoint: return "NotDisjoint";
        case ErrorKind::UnionNotInFilter: return "UnionNotInFilter";
        case ErrorKind::UnboundedQuantifier: return "UnboundedQuantifier";
        case ErrorKind::FreeVariable: return "FreeVariable";
        case ErrorKind::AlreadyStarred: return "AlreadyStarred";
        case ErrorKind::UninterpretedConstant: return "UninterpretedConstant";
        case ErrorKind::NonSetBound: return "NonSetBound";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

/// Base-10 digits to an integer; GMP would read a leading zero as octal.
Integer decimal_integer(std::string_view digits) {
    std::size_t first = digits.find_first_not_of('0');
    return Integer(first == std::string_view::npos ? std::string("0") : std::string(digits.substr(first)));
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) fail(ErrorKind::SyntaxError, "malformed rational '" + std::string(text) + "'");
        Integer d = decimal_integer(den);
        if (d == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
        result = Rational(decimal_integer(num), d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) || (whole.empty() && frac.empty())) {
            fail(ErrorKind::SyntaxError, "malformed decimal '" + std::string(text) + "'");
        }
        Integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        Integer digits = decimal_integer(std::string(whole) + std::string(frac));
        result = Rational(digits, scale);
    } else {
        if (!all_digits(s)) fail(ErrorKind::SyntaxError, "malformed rational '" + std::string(text) + "'");
        result = Rational(decimal_integer(s));
    }
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& q) { return q.str(); }

Integer floor(const Rational& q) {
    Integer n = boost::multiprecision::numerator(q);
    Integer d = boost::multiprecision::denominator(q);
    Integer r = n / d;
    if (n < 0 && r * d != n) r -= 1;
    return r;
}

Integer ceil(const Rational& q) {
    Integer n = boost::multiprecision::numerator(q);
    Integer d = boost::multiprecision::denominator(q);
    Integer r = n / d;
    if (n > 0 && r * d != n) r += 1;
    return r;
}

std::optional<Integer> exact_root(const Integer& value, unsigned n) {
    if (n == 0) return std::nullopt;
    if (value < 0) {
        if (n % 2 == 0) return std::nullopt;
        auto r = exact_root(Integer(-value), n);
        if (!r) return std::nullopt;
        return Integer(-*r);
    }
    Integer root;
    int exact = mpz_root(root.backend().data(), value.backend().data(), n);
    if (!exact) return std::nullopt;
    return root;
}

std::optional<Rational> exact_root(const Rational& q, unsigned n) {
    auto num = exact_root(Integer(boost::multiprecision::numerator(q)), n);
    auto den = exact_root(Integer(boost::multiprecision::denominator(q)), n);
    if (!num || !den) return std::nullopt;
    return Rational(*num, *den);
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) fail(ErrorKind::DivisionByZero, "zero raised to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    unsigned long e = static_cast<unsigned long>(exponent);
    while (e) {
        if (e & 1u) result *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return result;
}

Rational factorial(unsigned k) {
    Integer r = 1;
    for (unsigned i = 2; i <= k; ++i) r *= i;
    return Rational(r);
}

}  // namespace hypercalc
