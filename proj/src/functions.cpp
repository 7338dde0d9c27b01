#include "hypercalc/functions.hpp"

#include "hypercalc/error.hpp"

namespace hypercalc {

std::optional<Fn> function_named(std::string_view name) {
    if (name == "exp") return Fn::Exp;
    if (name == "ln") return Fn::Ln;
    if (name == "sin") return Fn::Sin;
    if (name == "cos") return Fn::Cos;
    if (name == "sqrt") return Fn::Sqrt;
    if (name == "abs") return Fn::Abs;
    return std::nullopt;
}

std::string_view to_string(Fn fn) {
    switch (fn) {
        case Fn::Exp: return "exp";
        case Fn::Ln: return "ln";
        case Fn::Sin: return "sin";
        case Fn::Cos: return "cos";
        case Fn::Sqrt: return "sqrt";
        case Fn::Abs: return "abs";
    }
    return "?";
}

namespace {

Coefficient exp_coefficient(unsigned k) { return Coefficient(Rational(1) / factorial(k)); }

Coefficient sin_coefficient(unsigned k) {
    if (k % 2 == 0) return Coefficient(0);
    Rational a = Rational(1) / factorial(k);
    return Coefficient((k / 2) % 2 ? Rational(-a) : a);
}

Coefficient cos_coefficient(unsigned k) {
    if (k % 2 == 1) return Coefficient(0);
    Rational a = Rational(1) / factorial(k);
    return Coefficient((k / 2) % 2 ? Rational(-a) : a);
}

LogSeries expand(Coefficient (*coefficient)(unsigned), const LogSeries& u, const Context& ctx) {
    Rational target = u.bound().value_or(ctx.order);
    if (u.is_series()) {
        Series s = compose_power_series(coefficient, u.part(Rational(0)), target);
        return LogSeries(std::move(s));
    }
    return compose_power_series(coefficient, u, target);
}

/// x = infinite + constant + small + u, where `infinite` collects every
/// monomial that is not finite, `small` the log-infinitesimals c/L^j and `u`
/// everything with a positive rho exponent.
struct Split {
    LogSeries infinite;
    Coefficient constant;
    LogSeries small;
    LogSeries u;
};

Split split(const LogSeries& x, const char* fn) {
    Split out;
    for (const auto& [k, s] : x.parts()) {
        if (s.bound() && *s.bound() <= 0) {
            fail(ErrorKind::InsufficientPrecision,
                 std::string(fn) + " argument " + x.str() + " is not determined up to an infinitesimal");
        }
        std::vector<Term> infinite;
        std::vector<Term> small;
        for (const auto& t : s.terms()) {
            if (t.exponent < 0 || (t.exponent == 0 && k > 0)) {
                infinite.push_back(t);
            } else if (t.exponent == 0 && k == 0) {
                out.constant = t.coeff;
            } else if (t.exponent == 0) {
                small.push_back(t);
            }
        }
        out.infinite += LogSeries::log_power(k, Series(std::move(infinite), std::nullopt));
        out.small += LogSeries::log_power(k, Series(std::move(small), std::nullopt));
        out.u += LogSeries::log_power(k, s.above(Rational(0)));
    }
    return out;
}

LogSeries argument_of(const Value& x, const char* fn) {
    auto ls = x.log_series();
    if (!ls) fail(ErrorKind::UnsupportedEscape, std::string(fn) + " of " + x.str() + " is outside the escape rules");
    return *ls;
}

Value exp_value(const Value& x, const Context& ctx) {
    if (x.is_series()) {
        const Series& s = x.series();
        if (s.bound() && *s.bound() <= 0) {
            fail(ErrorKind::InsufficientPrecision, "exp argument " + s.str() + " is not determined up to an infinitesimal");
        }
        Series amp = exp_infinitesimal(s.above(Rational(0)), ctx).scaled(exp(s.coefficient(Rational(0)), ctx));
        Series infinite = s.below(Rational(0));
        if (infinite.is_exact_zero()) return amp;
        return Value({Component{Atom{LogSeries(infinite), Wave::None, {}}, LogSeries(amp)}});
    }
    Split parts = split(argument_of(x, "exp"), "exp");
    if (!parts.small.is_exact_zero()) {
        fail(ErrorKind::UnsupportedEscape, "exp of the log-infinitesimal " + parts.small.str() + " is outside the escape rules");
    }
    // exp(c*L) = rho^(-c); other purely infinite parts become growth.
    LogSeries growth;
    Rational shift = 0;
    for (const auto& [k, s] : parts.infinite.parts()) {
        std::vector<Term> kept;
        for (const auto& t : s.terms()) {
            if (t.exponent < 0 || k > 1) {
                kept.push_back(t);
            } else if (k == 1) {
                if (!t.coeff.is_exact()) {
                    fail(ErrorKind::UnsupportedEscape, "exp(" + t.coeff.str() + "*ln(1/d)) is an irrational power of d");
                }
                shift -= t.coeff.exact();
            } else {
                fail(ErrorKind::UnsupportedEscape, "exp of a fractional power of ln(1/d) is outside the escape rules");
            }
        }
        growth += LogSeries::log_power(k, Series(std::move(kept), std::nullopt));
    }
    LogSeries amp = expand(exp_coefficient, parts.u, ctx).scaled(exp(parts.constant, ctx)).shifted(shift);
    return Value({Component{Atom{growth, Wave::None, {}}, amp}});
}

Series ln_series(const Series& x, const Context& ctx, LogSeries& log_part) {
    if (x.is_exact_zero()) fail(ErrorKind::DomainError, "ln of zero");
    if (x.empty()) fail(ErrorKind::InsufficientPrecision, "ln argument " + x.str() + " is indistinguishable from zero");
    const Term lead = x.leading();
    if (lead.coeff.sign() < 0) fail(ErrorKind::DomainError, "ln of negative number " + x.str());
    Series t = x.shifted(-lead.exponent).scaled(Coefficient(1) / lead.coeff) - Series::constant(Coefficient(1));
    if (lead.exponent != 0) log_part += LogSeries::log_power(Rational(1), Series::constant(Coefficient(Rational(-lead.exponent))));
    return Series::constant(ln(lead.coeff, ctx)) + log1p_infinitesimal(t, ctx);
}

Value ln_value(const Value& x, const Context& ctx) {
    if (x.is_series()) {
        LogSeries result;
        Series s = ln_series(x.series(), ctx, result);
        return Value(result + LogSeries(s));
    }
    auto comps = x.components();
    if (comps.size() != 1 || comps.front().atom.wave != Wave::None || !comps.front().amplitude.is_series()) {
        fail(ErrorKind::UnsupportedEscape, "ln of " + x.str() + " is outside the escape rules");
    }
    LogSeries result = comps.front().atom.growth;
    Series s = ln_series(comps.front().amplitude.part(Rational(0)), ctx, result);
    return Value(result + LogSeries(s));
}

Value trig_value(bool sine, const Value& x, const Context& ctx) {
    const char* name = sine ? "sin" : "cos";
    Split parts = split(argument_of(x, name), name);
    if (!parts.small.is_exact_zero()) {
        fail(ErrorKind::UnsupportedEscape, std::string(name) + " of the log-infinitesimal " + parts.small.str() +
                                               " is outside the escape rules");
    }
    LogSeries cu = expand(cos_coefficient, parts.u, ctx);
    LogSeries su = expand(sin_coefficient, parts.u, ctx);
    Coefficient sc = sin(parts.constant, ctx);
    Coefficient cc = cos(parts.constant, ctx);
    // sin and cos of the finite part w = constant + u
    LogSeries sin_w = cu.scaled(sc) + su.scaled(cc);
    LogSeries cos_w = cu.scaled(cc) - su.scaled(sc);
    if (parts.infinite.is_exact_zero()) return Value(sine ? sin_w : cos_w);

    LogSeries phase = parts.infinite;
    Coefficient sigma = 1;
    if (phase.dominant_sign() < 0) {
        phase = -phase;
        sigma = -1;
    }
    std::vector<Component> out;
    if (sine) {
        out.push_back({Atom{{}, Wave::Sin, phase}, cos_w.scaled(sigma)});
        out.push_back({Atom{{}, Wave::Cos, phase}, sin_w});
    } else {
        out.push_back({Atom{{}, Wave::Cos, phase}, cos_w});
        out.push_back({Atom{{}, Wave::Sin, phase}, sin_w.scaled(-sigma)});
    }
    return Value(std::move(out));
}

bool is_exact_zero(const Value& v) { return v.is_series() && v.series().is_exact_zero(); }

Value sqrt_value(const Value& x, const Context& ctx) {
    if (is_exact_zero(x)) return x;
    Analysis a = analyze(x);
    if (a.sign == Sign::Negative) fail(ErrorKind::DomainError, "sqrt of negative number " + x.str());
    if (a.sign != Sign::Positive) fail(ErrorKind::InsufficientPrecision, "sign of sqrt argument " + x.str() + " is not determined");
    return pow_rational(x, Rational(1, 2), ctx);
}

Value abs_value(const Value& x) {
    if (is_exact_zero(x)) return x;
    Analysis a = analyze(x);
    if (a.sign == Sign::Positive) return x;
    if (a.sign == Sign::Negative) return -x;
    if (a.category == Category::Zero) fail(ErrorKind::InsufficientPrecision, "sign of " + x.str() + " is not determined");
    fail(ErrorKind::UnsupportedEscape, "abs of the oscillating value " + x.str());
}

}  // namespace

Value apply(Fn fn, const Value& x, const Context& ctx) {
    switch (fn) {
        case Fn::Exp: return exp_value(x, ctx);
        case Fn::Ln: return ln_value(x, ctx);
        case Fn::Sin: return trig_value(true, x, ctx);
        case Fn::Cos: return trig_value(false, x, ctx);
        case Fn::Sqrt: return sqrt_value(x, ctx);
        case Fn::Abs: return abs_value(x);
    }
    return x;
}

Value pow_general(const Value& x, const Value& y, const Context& ctx) {
    if (y.is_series() && y.series().is_exact()) {
        const auto& terms = y.series().terms();
        if (terms.empty()) return Series::constant(Coefficient(1));
        if (terms.size() == 1 && terms.front().exponent == 0 && terms.front().coeff.is_exact()) {
            return pow_rational(x, terms.front().coeff.exact(), ctx);
        }
    }
    if (is_exact_zero(x)) {
        Analysis a = analyze(y);
        if (a.sign == Sign::Positive) return Series::zero();
        if (a.sign == Sign::Negative) fail(ErrorKind::DivisionByZero, "zero raised to the negative power " + y.str());
        fail(ErrorKind::Undecidable, "sign of the exponent " + y.str() + " of zero is not determined");
    }
    Analysis a = analyze(x);
    if (a.sign == Sign::Negative || a.sign == Sign::Zero) {
        fail(ErrorKind::DomainError, "power with non-positive base " + x.str() + " and non-rational exponent");
    }
    if (a.sign != Sign::Positive) fail(ErrorKind::Undecidable, "sign of the base " + x.str() + " is not determined");
    return exp_value(y * ln_value(x, ctx), ctx);
}

Value escape_arith(ArithOp op, const Value& a, const Value& b, const Context& ctx) {
    if (a.is_series() && b.is_series()) {
        fail(ErrorKind::InvalidArgument, "escape arithmetic needs an operand outside the power-series scale");
    }
    return arith(op, a, b, ctx);
}

}  // namespace hypercalc
