#include "hypercalc/value.hpp"

#include <algorithm>

#include "hypercalc/error.hpp"

namespace hypercalc {

// ---------------------------------------------------------------- LogSeries

LogSeries::LogSeries(Series s) {
    if (!s.is_exact_zero()) parts_.emplace(Rational(0), std::move(s));
}

LogSeries::LogSeries(std::map<Rational, Series> parts) : parts_(std::move(parts)) { normalize(); }

LogSeries LogSeries::log_power(const Rational& k, Series s) {
    LogSeries r;
    if (!s.is_exact_zero()) r.parts_.emplace(k, std::move(s));
    return r;
}

void LogSeries::normalize() {
    std::erase_if(parts_, [](const auto& kv) { return kv.second.is_exact_zero(); });
}

bool LogSeries::is_series() const { return parts_.empty() || (parts_.size() == 1 && parts_.begin()->first == 0); }

Series LogSeries::part(const Rational& k) const {
    auto it = parts_.find(k);
    return it == parts_.end() ? Series::zero() : it->second;
}

std::optional<LogSeries::Monomial> LogSeries::dominant() const {
    std::optional<Monomial> best;
    for (const auto& [k, s] : parts_) {
        if (s.empty()) continue;
        const Term& t = s.leading();
        if (!best || t.exponent < best->exponent || (t.exponent == best->exponent && k > best->log_power)) {
            best = Monomial{t.coeff, t.exponent, k};
        }
    }
    return best;
}

int LogSeries::dominant_sign() const {
    auto d = dominant();
    if (d) return d->coeff.sign();
    if (parts_.empty()) return 0;
    fail(ErrorKind::InsufficientPrecision, "sign of " + str() + " is not determined");
}

std::optional<Rational> LogSeries::valuation() const {
    std::optional<Rational> v;
    for (const auto& [k, s] : parts_) {
        auto sv = s.valuation();
        if (sv && (!v || *sv < *v)) v = sv;
    }
    return v;
}

std::optional<Rational> LogSeries::bound() const {
    std::optional<Rational> b;
    for (const auto& [k, s] : parts_) b = min_bound(b, s.bound());
    return b;
}

bool LogSeries::is_exact() const {
    return std::all_of(parts_.begin(), parts_.end(), [](const auto& kv) { return kv.second.is_exact(); });
}

LogSeries LogSeries::scaled(const Coefficient& c) const {
    LogSeries r;
    for (const auto& [k, s] : parts_) r.parts_.emplace(k, s.scaled(c));
    r.normalize();
    return r;
}

LogSeries LogSeries::shifted(const Rational& rho_shift) const {
    LogSeries r;
    for (const auto& [k, s] : parts_) r.parts_.emplace(k, s.shifted(rho_shift));
    return r;
}

LogSeries LogSeries::truncated(const Rational& bound) const {
    LogSeries r;
    for (const auto& [k, s] : parts_) r.parts_.emplace(k, s.truncated(bound));
    return r;
}

LogSeries LogSeries::operator-() const { return scaled(Coefficient(-1)); }

LogSeries operator+(const LogSeries& a, const LogSeries& b) {
    LogSeries r = a;
    for (const auto& [k, s] : b.parts_) {
        auto [it, inserted] = r.parts_.try_emplace(k, s);
        if (!inserted) it->second = it->second + s;
    }
    r.normalize();
    return r;
}

LogSeries operator*(const LogSeries& a, const LogSeries& b) {
    LogSeries r;
    for (const auto& [ka, sa] : a.parts_) {
        for (const auto& [kb, sb] : b.parts_) {
            Series p = sa * sb;
            auto [it, inserted] = r.parts_.try_emplace(ka + kb, p);
            if (!inserted) it->second = it->second + p;
        }
    }
    r.normalize();
    return r;
}

namespace {

std::string power_text(const Rational& e) {
    if (is_integer(e) && e >= 0) return e.str();
    return "(" + e.str() + ")";
}

}  // namespace

std::string LogSeries::str(std::string_view symbol) const {
    if (parts_.empty()) return "0";
    std::string out;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        const auto& [k, s] = *it;
        if (k == 0) {
            out += s.str(symbol);
            continue;
        }
        out += "(" + s.str(symbol) + ")*ln(1/" + std::string(symbol) + ")";
        if (k != 1) out += "^" + power_text(k);
    }
    return out;
}

LogSeries compose_power_series(const std::function<Coefficient(unsigned)>& coefficient, const LogSeries& u,
                               const Rational& target) {
    LogSeries result(Series::constant(coefficient(0)));
    if (u.is_exact_zero()) return result;
    const Rational v = *u.valuation();
    if (v <= 0) fail(ErrorKind::InsufficientPrecision, "power series argument " + u.str() + " is not infinitesimal");
    Rational kmax = 0;
    for (const auto& [k, s] : u.parts()) kmax = std::max(kmax, k);
    LogSeries power(Series::constant(Coefficient(1)));
    unsigned k = 1;
    for (; Rational(k) * v < target; ++k) {
        power = (power * u).truncated(target);
        Coefficient a = coefficient(k);
        if (!a.is_zero()) result += power.scaled(a);
    }
    // The discarded tail is dominated by its first term, of size rho^(k v) L^(k kmax).
    result = result.truncated(target);
    result += LogSeries::log_power(Rational(k) * kmax, Series::big_o(Rational(k) * v));
    return result;
}

// ---------------------------------------------------------------- Value

namespace {

std::vector<Component> normalized(std::vector<Component> in) {
    std::vector<Component> out;
    for (auto& c : in) {
        if (c.amplitude.is_exact_zero()) continue;
        auto it = std::find_if(out.begin(), out.end(), [&](const Component& o) { return o.atom == c.atom; });
        if (it == out.end()) {
            out.push_back(std::move(c));
        } else {
            it->amplitude += c.amplitude;
        }
    }
    std::erase_if(out, [](const Component& c) { return c.amplitude.is_exact_zero(); });
    std::stable_sort(out.begin(), out.end(),
                     [](const Component& a, const Component& b) { return a.atom.trivial() && !b.atom.trivial(); });
    return out;
}

}  // namespace

Value::Value(LogSeries s) {
    if (s.is_series()) {
        repr_ = s.part(Rational(0));
    } else {
        repr_ = std::vector<Component>{Component{Atom{}, std::move(s)}};
    }
}

Value::Value(std::vector<Component> components) {
    auto comps = normalized(std::move(components));
    if (comps.empty()) {
        repr_ = Series::zero();
    } else if (comps.size() == 1 && comps.front().atom.trivial() && comps.front().amplitude.is_series()) {
        repr_ = comps.front().amplitude.part(Rational(0));
    } else {
        repr_ = std::move(comps);
    }
}

const Series& Value::series() const {
    if (const auto* s = std::get_if<Series>(&repr_)) return *s;
    fail(ErrorKind::UnsupportedEscape, str() + " is not a power series in d");
}

std::vector<Component> Value::components() const {
    if (const auto* s = std::get_if<Series>(&repr_)) {
        if (s->is_exact_zero()) return {};
        return {Component{Atom{}, LogSeries(*s)}};
    }
    return std::get<std::vector<Component>>(repr_);
}

std::optional<LogSeries> Value::log_series() const {
    if (const auto* s = std::get_if<Series>(&repr_)) return LogSeries(*s);
    const auto& comps = std::get<std::vector<Component>>(repr_);
    if (comps.size() == 1 && comps.front().atom.trivial()) return comps.front().amplitude;
    return std::nullopt;
}

std::string Value::str(std::string_view symbol) const {
    if (const auto* s = std::get_if<Series>(&repr_)) return s->str(symbol);
    std::string out;
    for (const auto& c : std::get<std::vector<Component>>(repr_)) {
        if (!out.empty()) out += " + ";
        std::string amp = c.amplitude.str(symbol);
        bool compound = amp.find(' ') != std::string::npos;
        if (c.atom.trivial()) {
            out += amp;
            continue;
        }
        out += compound ? "(" + amp + ")" : amp;
        if (!c.atom.growth.is_exact_zero()) out += "*exp(" + c.atom.growth.str(symbol) + ")";
        if (c.atom.wave == Wave::Sin) out += "*sin(" + c.atom.phase.str(symbol) + ")";
        if (c.atom.wave == Wave::Cos) out += "*cos(" + c.atom.phase.str(symbol) + ")";
    }
    return out;
}

bool operator==(const Value& a, const Value& b) {
    if (a.is_series() && b.is_series()) return a.series() == b.series();
    auto ca = a.components();
    auto cb = b.components();
    if (ca.size() != cb.size()) return false;
    for (const auto& c : ca) {
        auto it = std::find_if(cb.begin(), cb.end(), [&](const Component& o) { return o.atom == c.atom; });
        if (it == cb.end() || !(it->amplitude == c.amplitude)) return false;
    }
    return true;
}

Value operator-(const Value& a) {
    if (a.is_series()) return -a.series();
    auto comps = a.components();
    for (auto& c : comps) c.amplitude = -c.amplitude;
    return Value(std::move(comps));
}

Value operator+(const Value& a, const Value& b) {
    if (a.is_series() && b.is_series()) return a.series() + b.series();
    auto comps = a.components();
    auto rest = b.components();
    comps.insert(comps.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
    return Value(std::move(comps));
}

Value operator-(const Value& a, const Value& b) { return a + (-b); }

namespace {

struct WavePart {
    Wave wave;
    LogSeries phase;
    Coefficient factor;
};

/// Appends factor*wave(phase) in canonical form: sin(-P) = -sin(P),
/// cos(-P) = cos(P), sin(0) = 0, cos(0) = 1.
void push_wave(std::vector<WavePart>& out, Wave wave, LogSeries phase, Coefficient factor) {
    if (phase.is_exact_zero()) {
        if (wave == Wave::Cos) out.push_back({Wave::None, {}, factor});
        return;
    }
    if (phase.dominant_sign() < 0) {
        phase = -phase;
        if (wave == Wave::Sin) factor = -factor;
    }
    out.push_back({wave, std::move(phase), std::move(factor)});
}

std::vector<WavePart> wave_product(const Atom& a, const Atom& b) {
    std::vector<WavePart> out;
    if (a.wave == Wave::None) {
        out.push_back({b.wave, b.phase, Coefficient(1)});
        return out;
    }
    if (b.wave == Wave::None) {
        out.push_back({a.wave, a.phase, Coefficient(1)});
        return out;
    }
    const Coefficient half = Rational(1, 2);
    LogSeries sum = a.phase + b.phase;
    LogSeries diff = a.phase - b.phase;
    if (a.wave == Wave::Sin && b.wave == Wave::Sin) {
        push_wave(out, Wave::Cos, diff, half);
        push_wave(out, Wave::Cos, sum, -half);
    } else if (a.wave == Wave::Sin && b.wave == Wave::Cos) {
        push_wave(out, Wave::Sin, sum, half);
        push_wave(out, Wave::Sin, diff, half);
    } else if (a.wave == Wave::Cos && b.wave == Wave::Sin) {
        push_wave(out, Wave::Sin, sum, half);
        push_wave(out, Wave::Sin, -diff, half);
    } else {
        push_wave(out, Wave::Cos, diff, half);
        push_wave(out, Wave::Cos, sum, half);
    }
    return out;
}

}  // namespace

Value operator*(const Value& a, const Value& b) {
    if (a.is_series() && b.is_series()) return a.series() * b.series();
    std::vector<Component> out;
    for (const auto& x : a.components()) {
        for (const auto& y : b.components()) {
            LogSeries growth = x.atom.growth + y.atom.growth;
            LogSeries amplitude = x.amplitude * y.amplitude;
            for (auto& w : wave_product(x.atom, y.atom)) {
                out.push_back(Component{Atom{growth, w.wave, std::move(w.phase)}, amplitude.scaled(w.factor)});
            }
        }
    }
    return Value(std::move(out));
}

namespace {

/// The single non-oscillating component c*exp(G)*L^k of `a`, if it has that shape.
std::optional<std::pair<Component, Rational>> monomial_component(const Value& a) {
    auto comps = a.components();
    if (comps.size() != 1 || comps.front().atom.wave != Wave::None) return std::nullopt;
    const auto& parts = comps.front().amplitude.parts();
    if (parts.size() != 1) return std::nullopt;
    return std::make_pair(comps.front(), parts.begin()->first);
}

}  // namespace

Value reciprocal(const Value& a, const Context& ctx) {
    if (a.is_series()) return reciprocal(a.series(), ctx);
    auto m = monomial_component(a);
    if (!m) fail(ErrorKind::UnsupportedEscape, "reciprocal of " + a.str() + " is outside the escape rules");
    const auto& [c, k] = *m;
    Series inv = reciprocal(c.amplitude.part(k), ctx);
    return Value({Component{Atom{-c.atom.growth, Wave::None, {}}, LogSeries::log_power(-k, inv)}});
}

Value divide(const Value& a, const Value& b, const Context& ctx) {
    if (a.is_series() && b.is_series()) return divide(a.series(), b.series(), ctx);
    return a * reciprocal(b, ctx);
}

Value pow_rational(const Value& a, const Rational& q, const Context& ctx) {
    if (a.is_series()) return pow_rational(a.series(), q, ctx);
    if (is_integer(q)) {
        long n = boost::multiprecision::numerator(q).convert_to<long>();
        if (n < 0) return reciprocal(pow_rational(a, Rational(-n), ctx), ctx);
        Value result = Series::constant(Coefficient(1));
        Value base = a;
        for (auto e = static_cast<unsigned long>(n); e; e >>= 1u) {
            if (e & 1u) result = result * base;
            if (e > 1) base = base * base;
        }
        return result;
    }
    auto m = monomial_component(a);
    if (!m) fail(ErrorKind::UnsupportedEscape, "(" + a.str() + ")^(" + to_string(q) + ") is outside the escape rules");
    const auto& [c, k] = *m;
    Series s = pow_rational(c.amplitude.part(k), q, ctx);
    return Value({Component{Atom{c.atom.growth.scaled(q), Wave::None, {}}, LogSeries::log_power(k * q, s)}});
}

Value arith(ArithOp op, const Value& a, const Value& b, const Context& ctx) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
        case ArithOp::Div: return divide(a, b, ctx);
    }
    return a;
}

// ---------------------------------------------------------------- analysis

std::string NumberClass::str() const {
    std::string s;
    switch (category) {
        case Category::Zero: return "Zero";
        case Category::Infinitesimal: s = "Infinitesimal"; break;
        case Category::Appreciable: s = "FiniteAppreciable"; break;
        case Category::Infinite: s = "Infinite"; break;
    }
    switch (sign) {
        case Sign::Negative: return s + "(-)";
        case Sign::Positive: return s + "(+)";
        default: return s + "(?)";
    }
}

std::string_view to_string(Magnitude m) {
    switch (m) {
        case Magnitude::Zero: return "Zero";
        case Magnitude::SubPolyInfinitesimal: return "SubPolyInfinitesimal";
        case Magnitude::PolyInfinitesimal: return "PolyInfinitesimal";
        case Magnitude::LogInfinitesimal: return "LogInfinitesimal";
        case Magnitude::Appreciable: return "Appreciable";
        case Magnitude::BoundedOscillation: return "BoundedOscillation";
        case Magnitude::SubPolyInfinite: return "SubPolyInfinite";
        case Magnitude::PolyInfinite: return "PolyInfinite";
        case Magnitude::SuperPolyInfinite: return "SuperPolyInfinite";
    }
    return "?";
}

namespace {

struct Scale {
    Rational e;
    Rational k;
};

bool larger(const Scale& a, const Scale& b) { return a.e < b.e || (a.e == b.e && a.k > b.k); }
bool same(const Scale& a, const Scale& b) { return a.e == b.e && a.k == b.k; }

}  // namespace

Analysis analyze(const Value& x) {
    Analysis a;
    auto comps = x.components();
    if (comps.empty()) {
        a.sign = Sign::Zero;
        return a;
    }

    std::size_t top = 0;
    for (std::size_t i = 1; i < comps.size(); ++i) {
        if ((comps[i].atom.growth - comps[top].atom.growth).dominant_sign() > 0) top = i;
    }
    const LogSeries growth = comps[top].atom.growth;
    std::vector<const Component*> group;
    for (const auto& c : comps) {
        if ((c.atom.growth - growth).dominant_sign() == 0) group.push_back(&c);
    }
    const int gsign = growth.dominant_sign();

    std::optional<Scale> best;
    bool big_o = false;
    bool has_term = false;
    for (const auto* c : group) {
        for (const auto& [k, s] : c->amplitude.parts()) {
            bool o = s.empty();
            Scale sc{o ? *s.bound() : s.leading().exponent, k};
            if (!best || larger(sc, *best)) {
                best = sc;
                big_o = o;
                has_term = !o;
            } else if (same(sc, *best)) {
                big_o = big_o || o;
                has_term = has_term || !o;
            }
        }
    }

    int kind;  // +1 infinite, -1 infinitesimal, 0 appreciable
    if (gsign > 0) {
        kind = 1;
        a.magnitude = Magnitude::SuperPolyInfinite;
    } else if (gsign < 0) {
        kind = -1;
        a.magnitude = Magnitude::SubPolyInfinitesimal;
    } else if (best->e < 0) {
        kind = 1;
        a.magnitude = Magnitude::PolyInfinite;
    } else if (best->e > 0) {
        kind = -1;
        a.magnitude = Magnitude::PolyInfinitesimal;
    } else if (best->k > 0) {
        kind = 1;
        a.magnitude = Magnitude::SubPolyInfinite;
    } else if (best->k < 0) {
        kind = -1;
        a.magnitude = Magnitude::LogInfinitesimal;
    } else {
        kind = 0;
        a.magnitude = Magnitude::Appreciable;
    }

    if (big_o) {
        if (kind >= 0) fail(ErrorKind::InsufficientPrecision, "leading behaviour of " + x.str() + " is not determined");
        a.determinate = false;
        a.sign = Sign::Unknown;
        if (has_term) {
            a.category = Category::Infinitesimal;
        } else {
            a.category = Category::Zero;
            a.magnitude = Magnitude::Zero;
        }
        return a;
    }

    Coefficient c = 0;
    Coefficient amp = 0;
    for (const auto* comp : group) {
        Coefficient v = comp->amplitude.part(best->k).coefficient(best->e);
        if (comp->atom.wave == Wave::None) {
            c += v;
        } else {
            amp += v.abs();
        }
    }
    const bool oscillating = !amp.is_zero();
    a.determinate = !oscillating;
    if (c.abs() > amp) {
        a.sign = c.sign() > 0 ? Sign::Positive : Sign::Negative;
    } else {
        a.sign = Sign::Unknown;
    }
    if (kind > 0) {
        if (a.sign == Sign::Unknown) {
            fail(ErrorKind::Undecidable, "oscillation dominates the infinite value " + x.str());
        }
        a.category = Category::Infinite;
    } else if (kind < 0) {
        a.category = Category::Infinitesimal;
    } else {
        a.category = Category::Appreciable;
        if (oscillating) {
            a.magnitude = Magnitude::BoundedOscillation;
            a.low = c - amp;
            a.high = c + amp;
        } else {
            a.standard = c;
        }
    }
    return a;
}

NumberClass classify(const Value& x) {
    Analysis a = analyze(x);
    if (a.category == Category::Appreciable && a.sign == Sign::Unknown) {
        fail(ErrorKind::Undecidable, x.str() + " oscillates in [" + a.low.str() + ", " + a.high.str() +
                                         "] and may be infinitesimal");
    }
    return {a.category, a.sign};
}

std::string ExtReal::str() const {
    switch (kind) {
        case Kind::PlusInfinity: return "+inf";
        case Kind::MinusInfinity: return "-inf";
        default: return value.str();
    }
}

ExtReal standard_part(const Value& x) {
    Analysis a = analyze(x);
    switch (a.category) {
        case Category::Zero:
        case Category::Infinitesimal: return ExtReal::finite(Coefficient(0));
        case Category::Infinite:
            return a.sign == Sign::Positive ? ExtReal::plus_infinity() : ExtReal::minus_infinity();
        case Category::Appreciable: break;
    }
    if (!a.determinate) {
        fail(ErrorKind::Undefined, "bounded oscillation in [" + a.low.str() + ", " + a.high.str() + "] has no standard part");
    }
    return ExtReal::finite(a.standard);
}

bool approx(const Value& x, const Value& y) {
    Analysis a = analyze(x - y);
    if (a.category == Category::Zero || a.category == Category::Infinitesimal) return true;
    if (a.category == Category::Appreciable && a.sign == Sign::Unknown) {
        fail(ErrorKind::Undecidable, "difference oscillates in [" + a.low.str() + ", " + a.high.str() + "]");
    }
    return false;
}

Ordering compare(const Value& x, const Value& y) {
    Value d = x - y;
    Analysis a = analyze(d);
    if (a.category == Category::Zero) {
        if (d.is_series() && d.series().is_exact_zero()) return Ordering::Equal;
        fail(ErrorKind::InsufficientPrecision, "difference " + d.str() + " is indistinguishable from zero");
    }
    if (a.sign == Sign::Unknown) fail(ErrorKind::Undecidable, "sign of " + d.str() + " is not determined");
    return a.sign == Sign::Positive ? Ordering::Greater : Ordering::Less;
}

std::string_view to_string(Ordering o) {
    switch (o) {
        case Ordering::Less: return "Less";
        case Ordering::Equal: return "Equal";
        case Ordering::Greater: return "Greater";
    }
    return "?";
}

}  // namespace hypercalc
