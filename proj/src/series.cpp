#include "hypercalc/series.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "hypercalc/error.hpp"

namespace hypercalc {

namespace mp = boost::multiprecision;

std::optional<Rational> min_bound(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

Series::Series(std::vector<Term> terms, std::optional<Rational> bound) : bound_(std::move(bound)) {
    std::stable_sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.exponent < y.exponent; });
    terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (bound_ && t.exponent >= *bound_) break;
        if (!terms_.empty() && terms_.back().exponent == t.exponent) {
            terms_.back().coeff += t.coeff;
        } else {
            terms_.push_back(std::move(t));
        }
    }
    std::erase_if(terms_, [](const Term& t) { return t.coeff.is_zero(); });
}

Series Series::constant(const Coefficient& c) { return monomial(c, Rational(0)); }

Series Series::monomial(const Coefficient& c, const Rational& exponent) {
    Series s;
    if (!c.is_zero()) s.terms_.push_back({exponent, c});
    return s;
}

const Term& Series::leading() const {
    if (terms_.empty()) fail(ErrorKind::InsufficientPrecision, "series " + str() + " has no leading term");
    return terms_.front();
}

std::optional<Rational> Series::valuation() const {
    if (!terms_.empty()) return terms_.front().exponent;
    return bound_;
}

Coefficient Series::coefficient(const Rational& e) const {
    if (bound_ && e >= *bound_) {
        fail(ErrorKind::InsufficientPrecision,
             "coefficient of d^" + to_string(e) + " is not determined by " + str());
    }
    for (const auto& t : terms_) {
        if (t.exponent == e) return t.coeff;
        if (t.exponent > e) break;
    }
    return Coefficient(0);
}

int Series::sign() const {
    if (!terms_.empty()) return terms_.front().coeff.sign();
    if (!bound_) return 0;
    fail(ErrorKind::InsufficientPrecision, "sign of " + str() + " is not determined");
}

Series Series::truncated(const Rational& bound) const {
    return Series(terms_, min_bound(bound_, bound));
}

Series Series::below(const Rational& e) const {
    Series s;
    for (const auto& t : terms_) {
        if (t.exponent >= e) break;
        s.terms_.push_back(t);
    }
    return s;
}

Series Series::above(const Rational& e) const {
    Series s;
    s.bound_ = bound_;
    for (const auto& t : terms_) {
        if (t.exponent > e) s.terms_.push_back(t);
    }
    return s;
}

Series Series::scaled(const Coefficient& c) const {
    if (c.is_zero()) return zero();
    Series s;
    s.bound_ = bound_;
    s.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Coefficient v = t.coeff * c;
        if (!v.is_zero()) s.terms_.push_back({t.exponent, std::move(v)});
    }
    return s;
}

Series Series::shifted(const Rational& shift) const {
    Series s = *this;
    for (auto& t : s.terms_) t.exponent += shift;
    if (s.bound_) *s.bound_ += shift;
    return s;
}

Series Series::operator-() const { return scaled(Coefficient(-1)); }

Series operator+(const Series& a, const Series& b) {
    Series s;
    s.bound_ = min_bound(a.bound_, b.bound_);
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    auto push = [&](Term t) {
        if (s.bound_ && t.exponent >= *s.bound_) return;
        if (!t.coeff.is_zero()) s.terms_.push_back(std::move(t));
    };
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->exponent < j->exponent)) {
            push(*i++);
        } else if (i == a.terms_.end() || j->exponent < i->exponent) {
            push(*j++);
        } else {
            push({i->exponent, i->coeff + j->coeff});
            ++i;
            ++j;
        }
    }
    return s;
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return Series::zero();
    const Rational va = *a.valuation();
    const Rational vb = *b.valuation();
    std::optional<Rational> bound;
    if (a.bound_) bound = *a.bound_ + vb;
    if (b.bound_) bound = min_bound(bound, Rational(*b.bound_ + va));
    std::map<Rational, Coefficient> acc;
    for (const auto& x : a.terms_) {
        for (const auto& y : b.terms_) {
            Rational e = x.exponent + y.exponent;
            if (bound && e >= *bound) break;
            auto [it, inserted] = acc.try_emplace(e, x.coeff * y.coeff);
            if (!inserted) it->second += x.coeff * y.coeff;
        }
    }
    Series s;
    s.bound_ = bound;
    for (auto& [e, c] : acc) {
        if (!c.is_zero()) s.terms_.push_back({e, std::move(c)});
    }
    return s;
}

bool operator==(const Series& a, const Series& b) {
    if (a.bound_ != b.bound_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        if (a.terms_[k].exponent != b.terms_[k].exponent || a.terms_[k].coeff != b.terms_[k].coeff) return false;
    }
    return true;
}

namespace {

std::string exponent_text(const Rational& e) {
    if (is_integer(e) && e >= 0) return e.str();
    return "(" + e.str() + ")";
}

}  // namespace

std::string Series::str(std::string_view symbol) const {
    if (terms_.empty() && !bound_) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        bool negative = t.coeff.sign() < 0;
        std::string coeff = (first ? t.coeff : t.coeff.abs()).str();
        if (!first) out += negative ? " - " : " + ";
        out += coeff;
        if (t.exponent != 0) {
            out += "*";
            out += symbol;
            out += "^" + exponent_text(t.exponent);
        }
        first = false;
    }
    if (bound_) {
        if (!first) out += " + ";
        out += "O(";
        out += symbol;
        out += "^" + exponent_text(*bound_) + ")";
    }
    return out;
}

namespace {

class SeriesReader {
public:
    SeriesReader(std::string_view text, std::string_view symbol) : text_(text), symbol_(symbol) {}

    Series read() {
        std::vector<Term> terms;
        std::optional<Rational> bound;
        skip();
        if (at_end()) throw SyntaxError(pos_, "empty series text");
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        for (;;) {
            skip();
            if (text_.substr(pos_, 2) == "O(") {
                if (negative) throw SyntaxError(pos_, "negated O-term");
                if (bound) throw SyntaxError(pos_, "duplicate O-term");
                pos_ += 2;
                expect_symbol_power();
                bound = read_exponent();
                skip();
                expect(')');
            } else {
                if (bound) throw SyntaxError(pos_, "term after O-term");
                Coefficient c = read_coefficient();
                if (negative) c = -c;
                Rational e = 0;
                skip();
                if (!at_end() && peek() == '*') {
                    ++pos_;
                    expect_symbol_power();
                    e = read_exponent();
                }
                if (!terms.empty() && e <= terms.back().exponent) throw SyntaxError(pos_, "exponents must increase");
                if (c.is_zero() && !(terms.empty() && e == 0)) throw SyntaxError(pos_, "zero coefficient");
                terms.push_back({e, c});
            }
            skip();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') throw SyntaxError(pos_, "expected '+' or '-'");
            negative = peek() == '-';
            ++pos_;
        }
        if (terms.size() == 1 && terms.front().coeff.is_zero()) {
            if (bound) throw SyntaxError(pos_, "zero coefficient");
            terms.clear();
        }
        return Series(std::move(terms), bound);
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    void expect(char c) {
        if (at_end() || peek() != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }
    void expect_symbol_power() {
        skip();
        if (text_.substr(pos_, symbol_.size()) != symbol_) throw SyntaxError(pos_, "expected '" + std::string(symbol_) + "'");
        pos_ += symbol_.size();
        skip();
        expect('^');
    }
    Rational read_exponent() {
        skip();
        if (!at_end() && peek() == '(') {
            ++pos_;
            std::size_t start = pos_;
            while (!at_end() && peek() != ')') ++pos_;
            if (at_end()) throw SyntaxError(start, "unterminated exponent");
            Rational q = parse_rational(text_.substr(start, pos_ - start));
            ++pos_;
            return q;
        }
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) throw SyntaxError(pos_, "expected exponent");
        return parse_rational(text_.substr(start, pos_ - start));
    }
    Coefficient read_coefficient() {
        skip();
        std::size_t start = pos_;
        bool decimal = false;
        while (!at_end()) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '/') {
                ++pos_;
            } else if (c == '.' || c == 'e' || c == 'E') {
                decimal = true;
                ++pos_;
                if (!at_end() && (c == 'e' || c == 'E') && (peek() == '-' || peek() == '+')) ++pos_;
            } else {
                break;
            }
        }
        if (start == pos_) throw SyntaxError(pos_, "expected coefficient");
        std::string token(text_.substr(start, pos_ - start));
        if (!decimal) return Coefficient(parse_rational(token));
        unsigned digits = 0;
        for (char c : token) {
            if (c == 'e' || c == 'E') break;
            if (std::isdigit(static_cast<unsigned char>(c))) ++digits;
        }
        digits = std::max(digits, 16u);
        return Coefficient::decimal(Decimal(token, digits));
    }

    std::string_view text_;
    std::string_view symbol_;
    std::size_t pos_ = 0;
};

}  // namespace

Series Series::parse(std::string_view text, std::string_view symbol) { return SeriesReader(text, symbol).read(); }

Series construct(const Rational& q, const Context& ctx) { return Series::constant(Coefficient(q)).truncated(ctx.order); }

Series construct_rho(const Context& ctx) { return construct_term(Coefficient(1), Rational(1), ctx); }

Series construct_term(const Coefficient& c, const Rational& e, const Context& ctx) {
    if (c.is_zero()) fail(ErrorKind::InvalidArgument, "term coefficient must be nonzero");
    if (e >= ctx.order) {
        fail(ErrorKind::InsufficientPrecision, "exponent " + to_string(e) + " is not below the order bound " + to_string(ctx.order));
    }
    return Series::monomial(c, e).truncated(ctx.order);
}

Series compose_power_series(const std::function<Coefficient(unsigned)>& coefficient, const Series& u,
                            const Rational& target) {
    Series result = Series::constant(coefficient(0));
    if (u.is_exact_zero()) return result;
    const Rational v = *u.valuation();
    if (v <= 0) fail(ErrorKind::InsufficientPrecision, "power series argument " + u.str() + " is not infinitesimal");
    Series power = Series::constant(Coefficient(1));
    for (unsigned k = 1; Rational(k) * v < target; ++k) {
        power = (power * u).truncated(target);
        Coefficient a = coefficient(k);
        if (!a.is_zero()) result += power.scaled(a);
    }
    return result.truncated(target);
}

namespace {

Rational expansion_target(const Series& u, const Context& ctx) { return u.bound() ? *u.bound() : ctx.order; }

/// Splits a nonzero series as c*rho^e*(1 + t) and returns t.
Series unit_tail(const Series& x, const Term& lead) {
    return x.shifted(-lead.exponent).scaled(Coefficient(1) / lead.coeff) - Series::constant(Coefficient(1));
}

}  // namespace

Series reciprocal(const Series& y, const Context& ctx) {
    if (y.is_exact_zero()) fail(ErrorKind::DivisionByZero, "division by exact zero");
    if (y.empty()) fail(ErrorKind::InsufficientPrecision, "divisor " + y.str() + " is indistinguishable from zero");
    const Term lead = y.leading();
    const Coefficient inv = Coefficient(1) / lead.coeff;
    Series t = unit_tail(y, lead);
    if (t.is_exact_zero()) return Series::monomial(inv, -lead.exponent);
    Series g = compose_power_series([](unsigned k) { return Coefficient(k % 2 ? -1 : 1); }, t, expansion_target(t, ctx));
    return g.scaled(inv).shifted(-lead.exponent);
}

Series divide(const Series& x, const Series& y, const Context& ctx) { return x * reciprocal(y, ctx); }

Series pow_int(const Series& x, long n, const Context& ctx) {
    if (n == 0) return Series::constant(Coefficient(1));
    if (n < 0) return reciprocal(pow_int(x, -n, ctx), ctx);
    Series result = Series::constant(Coefficient(1));
    Series base = x;
    auto e = static_cast<unsigned long>(n);
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

Series pow_rational(const Series& x, const Rational& q, const Context& ctx) {
    if (is_integer(q)) return pow_int(x, mp::numerator(q).convert_to<long>(), ctx);
    if (x.is_exact_zero()) {
        if (q < 0) fail(ErrorKind::DivisionByZero, "zero raised to negative power " + to_string(q));
        return Series::zero();
    }
    if (x.empty()) fail(ErrorKind::InsufficientPrecision, "base " + x.str() + " is indistinguishable from zero");
    const Term lead = x.leading();
    Coefficient scale = pow(lead.coeff, q, ctx);
    Series t = unit_tail(x, lead);
    if (t.is_exact_zero()) return Series::monomial(scale, lead.exponent * q);
    std::vector<Rational> binom{Rational(1)};
    auto binomial = [&binom, &q](unsigned k) {
        while (binom.size() <= k) {
            auto j = static_cast<long>(binom.size());
            binom.push_back(binom.back() * (q - (j - 1)) / j);
        }
        return Coefficient(binom[k]);
    };
    Series b = compose_power_series(binomial, t, expansion_target(t, ctx));
    return b.scaled(scale).shifted(lead.exponent * q);
}

namespace {

void require_infinitesimal(const Series& u, const char* fn) {
    if (u.is_exact_zero()) return;
    if (*u.valuation() <= 0) {
        fail(ErrorKind::InsufficientPrecision, std::string(fn) + " expansion needs an infinitesimal argument, got " + u.str());
    }
}

}  // namespace

Series exp_infinitesimal(const Series& u, const Context& ctx) {
    require_infinitesimal(u, "exp");
    return compose_power_series([](unsigned k) { return Coefficient(Rational(1) / factorial(k)); }, u,
                                expansion_target(u, ctx));
}

Series log1p_infinitesimal(const Series& u, const Context& ctx) {
    require_infinitesimal(u, "ln");
    return compose_power_series(
        [](unsigned k) {
            if (k == 0) return Coefficient(0);
            return Coefficient(Rational(k % 2 ? 1 : -1, static_cast<long>(k)));
        },
        u, expansion_target(u, ctx));
}

Series sin_infinitesimal(const Series& u, const Context& ctx) {
    require_infinitesimal(u, "sin");
    return compose_power_series(
        [](unsigned k) {
            if (k % 2 == 0) return Coefficient(0);
            Rational a = Rational(1) / factorial(k);
            return Coefficient((k / 2) % 2 ? Rational(-a) : a);
        },
        u, expansion_target(u, ctx));
}

Series cos_infinitesimal(const Series& u, const Context& ctx) {
    require_infinitesimal(u, "cos");
    return compose_power_series(
        [](unsigned k) {
            if (k % 2 == 1) return Coefficient(0);
            Rational a = Rational(1) / factorial(k);
            return Coefficient((k / 2) % 2 ? Rational(-a) : a);
        },
        u, expansion_target(u, ctx));
}

}  // namespace hypercalc
