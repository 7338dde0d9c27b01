#include "hypercalc/calculus.hpp"

#include <algorithm>

namespace hypercalc {

namespace mp = boost::multiprecision;

const ProbeCatalog& ProbeCatalog::standard() {
    static const ProbeCatalog catalog = [] {
        const Series rho = Series::rho();
        const Series rho2 = Series::monomial(Coefficient(1), Rational(2));
        const Series inv = Series::monomial(Coefficient(1), Rational(-1));
        ProbeCatalog c;
        c.infinitesimals = {rho, -rho, rho2, -rho2, Series::monomial(Coefficient(1), Rational(1, 2)), rho + rho2};
        c.infinite = {inv, inv + rho, inv.scaled(Coefficient(2)), Series::monomial(Coefficient(1), Rational(-2))};
        return c;
    }();
    return catalog;
}

void ProbeCatalog::validate() const {
    if (infinitesimals.empty() || infinite.empty()) fail(ErrorKind::InvalidArgument, "probe catalog must not be empty");
    for (const auto& p : infinitesimals) {
        if (p.empty() || p.leading().exponent <= 0) {
            fail(ErrorKind::InvalidArgument, "probe " + p.str() + " is not a nonzero infinitesimal");
        }
    }
    for (const auto& p : infinite) {
        if (p.empty() || p.leading().exponent >= 0 || p.leading().coeff.sign() <= 0) {
            fail(ErrorKind::InvalidArgument, "probe " + p.str() + " is not positive infinite");
        }
    }
}

std::vector<Series> ProbeCatalog::near(const Rational& point) const {
    std::vector<Series> out;
    for (const auto& dx : infinitesimals) out.push_back(Series::constant(Coefficient(point)) + dx);
    return out;
}

std::string_view to_string(Verdict::Kind k) {
    switch (k) {
        case Verdict::Kind::Holds: return "Holds";
        case Verdict::Kind::Refuted: return "Refuted";
        case Verdict::Kind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

bool close(const ExtReal& a, const ExtReal& b, const Context& ctx) {
    if (a.kind != b.kind) return false;
    if (!a.is_finite()) return true;
    if (a.value.is_exact() && b.value.is_exact()) return a.value.exact() == b.value.exact();
    Integer scale = mp::pow(Integer(10), ctx.digits / 2);
    Coefficient tolerance = Coefficient::decimal(Rational(Integer(1), scale), std::max(ctx.digits, 16u));
    return distance(a.value, b.value) < tolerance;
}

namespace {

/// Failures meaning "this point is not in the function's domain".
bool outside_domain(const Error& e) {
    return e.kind() == ErrorKind::DomainError || e.kind() == ErrorKind::NegativeBase ||
           e.kind() == ErrorKind::DivisionByZero;
}

/// Failures meaning "the model cannot decide this probe".
bool undecided(const Error& e) {
    return e.kind() == ErrorKind::Undecidable || e.kind() == ErrorKind::UnsupportedEscape ||
           e.kind() == ErrorKind::Undefined;
}

Value constant(const Rational& q) { return Series::constant(Coefficient(q)); }

struct Probe {
    std::optional<Value> value;
    bool undecided = false;
    std::string note;
};

Probe evaluate(const FuncExpr& f, const Env& env, const Context& ctx) {
    try {
        return {eval(f, env, ctx), false, {}};
    } catch (const Error& e) {
        if (outside_domain(e)) return {std::nullopt, false, e.what()};
        if (undecided(e)) return {std::nullopt, true, e.what()};
        throw;
    }
}

Observation observe(std::vector<Binding> at, const Probe& p) { return {std::move(at), p.value, p.note}; }

/// Taylor coefficients a_0..a_k of f(c + dir*rho) in the variable dir*rho, or
/// nullopt when a fractional or negative exponent occurs below k.
std::optional<std::vector<Coefficient>> taylor(const Value& v, unsigned k, int dir) {
    if (!v.is_series()) return std::nullopt;
    const Series& s = v.series();
    for (const auto& t : s.terms()) {
        if (t.exponent >= k) break;
        if (t.exponent < 0 || !is_integer(t.exponent)) return std::nullopt;
    }
    std::vector<Coefficient> out;
    for (unsigned j = 0; j <= k; ++j) {
        Coefficient a = s.coefficient(Rational(j));
        out.push_back(dir < 0 && j % 2 ? -a : a);
    }
    return out;
}

ExtReal finite(const Coefficient& c) { return ExtReal::finite(c); }

}  // namespace

DerivativeResult derivative(const FuncExpr& f, const Rational& c, unsigned k, const Context& ctx,
                            const ProbeCatalog& catalog) {
    if (k == 0) fail(ErrorKind::InvalidArgument, "derivative order must be positive");
    if (ctx.order < Rational(k + 1)) {
        fail(ErrorKind::InsufficientPrecision, "order bound " + to_string(ctx.order) + " is too small for derivative " +
                                                   std::to_string(k));
    }
    DerivativeResult r;
    Value fc;
    try {
        fc = eval(f, {{"x", constant(c)}}, ctx);
    } catch (const Error& e) {
        if (outside_domain(e)) fail(ErrorKind::DomainError, to_string(c) + " is not in the domain of " + f.str() + ": " + e.what());
        throw;
    }
    const Series rho = Series::rho();
    const Value xp = Series::constant(Coefficient(c)) + rho;
    const Value xm = Series::constant(Coefficient(c)) - rho;
    Probe plus = evaluate(f, {{"x", xp}}, ctx);
    Probe minus = evaluate(f, {{"x", xm}}, ctx);
    r.observations.push_back(observe({{"x", xp}}, plus));
    r.observations.push_back(observe({{"x", xm}}, minus));
    if (!plus.value && !minus.value) {
        if (plus.undecided || minus.undecided) {
            r.kind = DerivativeResult::Kind::Inconclusive;
            r.reason = plus.undecided ? plus.note : minus.note;
            return r;
        }
        fail(ErrorKind::DomainError, f.str() + " is undefined on both sides of " + to_string(c));
    }

    std::optional<std::vector<Coefficient>> a, b;
    if (plus.value) {
        a = taylor(*plus.value, k, 1);
        if (!a) {
            r.kind = DerivativeResult::Kind::NoDerivative;
            r.reason = "f(c+d) has no Taylor expansion of order " + std::to_string(k);
            r.witness = {{"x", xp}, {"f(x)", *plus.value}};
            return r;
        }
    }
    if (minus.value) {
        b = taylor(*minus.value, k, -1);
        if (!b) {
            r.kind = DerivativeResult::Kind::NoDerivative;
            r.reason = "f(c-d) has no Taylor expansion of order " + std::to_string(k);
            r.witness = {{"x", xm}, {"f(x)", *minus.value}};
            return r;
        }
    }
    if (a && b) {
        for (unsigned j = 0; j <= k; ++j) {
            if (!close(finite((*a)[j]), finite((*b)[j]), ctx)) {
                r.kind = DerivativeResult::Kind::NoDerivative;
                r.reason = "one-sided expansions disagree at order " + std::to_string(j);
                r.witness = {{"x", xp}, {"f(x)", *plus.value}, {"x'", xm}, {"f(x')", *minus.value}};
                return r;
            }
        }
    }
    const auto& coeffs = a ? *a : *b;
    if (!close(finite(coeffs[0]), standard_part(fc), ctx) || !fc.is_series()) {
        r.kind = DerivativeResult::Kind::NoDerivative;
        r.reason = "f is not continuous at c";
        r.witness = {{"x", a ? xp : xm}, {"f(x)", a ? *plus.value : *minus.value}, {"f(c)", fc}};
        return r;
    }
    r.value = ExtReal::finite(coeffs[k] * Coefficient(factorial(k)));

    if (k == 1) {
        for (const auto& dx : catalog.infinitesimals) {
            Value x = Series::constant(Coefficient(c)) + dx;
            Probe p = evaluate(f, {{"x", x}}, ctx);
            r.observations.push_back(observe({{"x", x}}, p));
            if (!p.value) continue;
            Value quotient = divide(*p.value - fc, dx, ctx);
            ExtReal st;
            try {
                st = standard_part(quotient);
            } catch (const Error& e) {
                if (!undecided(e)) throw;
                r.kind = DerivativeResult::Kind::Inconclusive;
                r.reason = e.what();
                return r;
            }
            if (!close(st, r.value, ctx)) {
                r.kind = DerivativeResult::Kind::NoDerivative;
                r.reason = "difference quotient at dx = " + dx.str() + " has standard part " + st.str();
                r.witness = {{"dx", dx}, {"quotient", quotient}};
                return r;
            }
        }
    }
    return r;
}

LimitResult limit(const FuncExpr& f, const LimitTarget& target, const Context& ctx, const IntervalSet& domain,
                  const ProbeCatalog& catalog, const std::string& var) {
    std::vector<Value> points;
    if (target.kind == LimitTarget::Kind::Point) {
        const Value c = constant(target.point);
        const Value rho = Series::rho();
        bool right = star_member(c + rho, domain);
        bool left = star_member(c - rho, domain);
        bool cluster = target.side == Side::Right ? right : target.side == Side::Left ? left : (left || right);
        if (!cluster) fail(ErrorKind::DomainError, to_string(target.point) + " is not a cluster point of " + domain.str());
        for (const auto& dx : catalog.infinitesimals) {
            int s = dx.leading().coeff.sign();
            if ((target.side == Side::Right && s < 0) || (target.side == Side::Left && s > 0)) continue;
            points.push_back(c + Value(dx));
        }
    } else {
        const int dir = target.kind == LimitTarget::Kind::PlusInfinity ? 1 : -1;
        for (const auto& h : catalog.infinite) points.push_back(dir > 0 ? Value(h) : -Value(h));
        if (!star_member(points.front(), domain)) {
            fail(ErrorKind::DomainError, domain.str() + " is bounded in the direction of the limit");
        }
    }

    LimitResult r;
    std::optional<std::size_t> reference;
    std::vector<ExtReal> standard;
    std::string undecided_note;
    for (const auto& x : points) {
        if (!star_member(x, domain)) {
            r.observations.push_back({{{var, x}}, std::nullopt, "outside the domain"});
            continue;
        }
        Probe p = evaluate(f, {{var, x}}, ctx);
        r.observations.push_back(observe({{var, x}}, p));
        if (p.undecided && undecided_note.empty()) undecided_note = p.note;
        if (!p.value) continue;
        ExtReal st;
        try {
            st = standard_part(*p.value);
        } catch (const Error& e) {
            if (!undecided(e)) throw;
            r.observations.back().note = e.what();
            if (undecided_note.empty()) undecided_note = e.what();
            continue;
        }
        r.observations.back().note = "st = " + st.str();
        std::size_t idx = r.observations.size() - 1;
        if (!reference) {
            reference = idx;
            r.value = st;
        } else if (!close(st, r.value, ctx)) {
            const auto& first = r.observations[*reference];
            r.kind = LimitResult::Kind::NoLimit;
            r.reason = "probes disagree: " + r.value.str() + " vs " + st.str();
            r.witness = {{var, first.at.front().value}, {"f", *first.value}, {var + "'", x}, {"f'", *p.value}};
            return r;
        }
    }
    if (!undecided_note.empty()) {
        r.kind = LimitResult::Kind::Inconclusive;
        r.reason = undecided_note;
        return r;
    }
    if (!reference) fail(ErrorKind::DomainError, "no probe lies in the domain of " + f.str());
    return r;
}

LimitResult seq_limit(const FuncExpr& a, const Context& ctx, const ProbeCatalog& catalog) {
    return limit(a, LimitTarget::plus_infinity(), ctx, IntervalSet::real_line(), catalog, "n");
}

Verdict continuity_at(const FuncExpr& f, const Rational& c, const Context& ctx, const IntervalSet& domain,
                      const ProbeCatalog& catalog) {
    if (!domain.contains(c)) fail(ErrorKind::DomainError, to_string(c) + " is not in " + domain.str());
    Value fc;
    try {
        fc = eval(f, {{"x", constant(c)}}, ctx);
    } catch (const Error& e) {
        if (outside_domain(e)) fail(ErrorKind::DomainError, to_string(c) + " is not in the domain of " + f.str() + ": " + e.what());
        throw;
    }
    Verdict v;
    std::string undecided_note;
    for (const auto& xs : catalog.near(c)) {
        Value x = xs;
        if (!star_member(x, domain)) continue;
        Probe p = evaluate(f, {{"x", x}}, ctx);
        v.observations.push_back(observe({{"x", x}}, p));
        if (p.undecided && undecided_note.empty()) undecided_note = p.note;
        if (!p.value) continue;
        ++v.probes;
        bool near;
        try {
            near = approx(*p.value, fc);
        } catch (const Error& e) {
            if (!undecided(e)) throw;
            if (undecided_note.empty()) undecided_note = e.what();
            continue;
        }
        if (!near) {
            v.kind = Verdict::Kind::Refuted;
            v.reason = "f(x) is not infinitely close to f(c)";
            v.witness = {{"x", x}, {"f(x)", *p.value}, {"f(c)", fc}};
            return v;
        }
    }
    if (!undecided_note.empty()) {
        v.kind = Verdict::Kind::Inconclusive;
        v.reason = undecided_note;
        return v;
    }
    v.reason = "no counterexample found among " + std::to_string(v.probes) + " probes";
    return v;
}

namespace {

std::vector<Rational> anchors(const IntervalSet& domain) {
    auto out = domain.samples();
    auto ends = domain.finite_endpoints();
    out.insert(out.end(), ends.begin(), ends.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

Verdict uniform_continuity_probe(const FuncExpr& f, const IntervalSet& domain, const Context& ctx,
                                 const ProbeCatalog& catalog) {
    std::vector<std::pair<Value, Value>> pairs;
    for (const auto& s : domain.samples()) {
        for (const auto& dx : catalog.infinitesimals) pairs.emplace_back(constant(s), constant(s) + Value(dx));
    }
    for (const auto& a : anchors(domain)) {
        auto near = catalog.near(a);
        for (std::size_t i = 0; i < near.size(); ++i) {
            for (std::size_t j = i + 1; j < near.size(); ++j) pairs.emplace_back(near[i], near[j]);
        }
    }
    for (int dir : {1, -1}) {
        for (const auto& h : catalog.infinite) {
            Value big = dir > 0 ? Value(h) : -Value(h);
            for (const auto& dx : catalog.infinitesimals) pairs.emplace_back(big, big + Value(dx));
        }
    }

    Verdict v;
    std::string undecided_note;
    for (const auto& [p, q] : pairs) {
        if (!star_member(p, domain) || !star_member(q, domain)) continue;
        Probe fp = evaluate(f, {{"x", p}}, ctx);
        Probe fq = evaluate(f, {{"x", q}}, ctx);
        if ((fp.undecided || fq.undecided) && undecided_note.empty()) undecided_note = fp.undecided ? fp.note : fq.note;
        if (!fp.value || !fq.value) continue;
        ++v.probes;
        Value gap = *fq.value - *fp.value;
        bool near;
        try {
            near = approx(*fq.value, *fp.value);
        } catch (const Error& e) {
            if (!undecided(e)) throw;
            if (undecided_note.empty()) undecided_note = e.what();
            continue;
        }
        if (!near) {
            v.kind = Verdict::Kind::Refuted;
            v.reason = "x and x' are infinitely close but f(x') - f(x) is not infinitesimal";
            v.witness = {{"x", p}, {"x'", q}, {"f(x)", *fp.value}, {"f(x')", *fq.value}, {"gap", gap}};
            return v;
        }
    }
    if (v.probes == 0 && undecided_note.empty()) fail(ErrorKind::DomainError, "no probe pair lies in *" + domain.str());
    if (!undecided_note.empty()) {
        v.kind = Verdict::Kind::Inconclusive;
        v.reason = undecided_note;
        return v;
    }
    v.reason = "no counterexample found among " + std::to_string(v.probes) + " probe pairs";
    return v;
}

Verdict convergence_probe(const FuncExpr& family, const IntervalSet& domain, const FuncExpr& limit_expr,
                          ConvergenceMode mode, const Context& ctx, const ProbeCatalog& catalog) {
    std::vector<Value> xs;
    for (const auto& s : domain.samples()) xs.push_back(constant(s));
    if (mode == ConvergenceMode::Uniform) {
        for (const auto& a : anchors(domain)) {
            for (const auto& x : catalog.near(a)) {
                if (star_member(x, domain)) xs.push_back(x);
            }
        }
        for (int dir : {1, -1}) {
            for (const auto& h : catalog.infinite) {
                Value big = dir > 0 ? Value(h) : -Value(h);
                if (star_member(big, domain)) xs.push_back(big);
            }
        }
    }
    if (xs.empty()) fail(ErrorKind::DomainError, "no probe lies in *" + domain.str());

    Verdict v;
    std::string undecided_note;
    for (const auto& h : catalog.infinite) {
        const Value n = h;
        for (const auto& x : xs) {
            Probe fn = evaluate(family, {{"n", n}, {"x", x}}, ctx);
            Probe lim = evaluate(limit_expr, {{"x", x}}, ctx);
            v.observations.push_back(observe({{"n", n}, {"x", x}}, fn));
            if ((fn.undecided || lim.undecided) && undecided_note.empty()) undecided_note = fn.undecided ? fn.note : lim.note;
            if (!fn.value || !lim.value) continue;
            ++v.probes;
            bool near;
            try {
                near = approx(*fn.value, *lim.value);
            } catch (const Error& e) {
                if (!undecided(e)) throw;
                if (undecided_note.empty()) undecided_note = e.what();
                continue;
            }
            if (!near) {
                v.kind = Verdict::Kind::Refuted;
                v.reason = "f_n(x) is not infinitely close to f(x)";
                v.witness = {{"n", n}, {"x", x}, {"f_n(x)", *fn.value}, {"f(x)", *lim.value}};
                return v;
            }
        }
    }
    if (!undecided_note.empty()) {
        v.kind = Verdict::Kind::Inconclusive;
        v.reason = undecided_note;
        return v;
    }
    v.reason = "no counterexample found among " + std::to_string(v.probes) + " probes";
    return v;
}

}  // namespace hypercalc
