#include "hypercalc/topology.hpp"

#include <algorithm>
#include <cctype>

#include "hypercalc/error.hpp"

namespace hypercalc {

std::string ExtRational::str() const {
    if (infinity < 0) return "-inf";
    if (infinity > 0) return "inf";
    return value.str();
}

bool Interval::contains(const Rational& q) const {
    ExtRational x = ExtRational::finite(q);
    bool above = lo < x || (lo == x && lo_closed);
    bool below = x < hi || (x == hi && hi_closed);
    return above && below;
}

std::string Interval::str() const {
    return std::string(lo_closed ? "[" : "(") + lo.str() + "," + hi.str() + (hi_closed ? "]" : ")");
}

IntervalSet::IntervalSet(std::vector<Interval> components) {
    for (auto& c : components) {
        if (!c.lo.is_finite()) c.lo_closed = false;
        if (!c.hi.is_finite()) c.hi_closed = false;
    }
    std::erase_if(components, [](const Interval& c) {
        return c.hi < c.lo || (c.lo == c.hi && !(c.lo_closed && c.hi_closed));
    });
    std::sort(components.begin(), components.end(), [](const Interval& a, const Interval& b) {
        if (a.lo == b.lo) return a.lo_closed && !b.lo_closed;
        return a.lo < b.lo;
    });
    for (auto& c : components) {
        if (!components_.empty()) {
            Interval& cur = components_.back();
            bool touches = c.lo < cur.hi || (c.lo == cur.hi && (cur.hi_closed || c.lo_closed));
            if (touches) {
                if (cur.lo == c.lo) cur.lo_closed = cur.lo_closed || c.lo_closed;
                if (cur.hi < c.hi) {
                    cur.hi = c.hi;
                    cur.hi_closed = c.hi_closed;
                } else if (cur.hi == c.hi) {
                    cur.hi_closed = cur.hi_closed || c.hi_closed;
                }
                continue;
            }
        }
        components_.push_back(c);
    }
}

IntervalSet IntervalSet::real_line() {
    return IntervalSet({Interval{ExtRational::minus_infinity(), false, ExtRational::plus_infinity(), false}});
}

IntervalSet IntervalSet::point(const Rational& q) {
    return IntervalSet({Interval{ExtRational::finite(q), true, ExtRational::finite(q), true}});
}

IntervalSet IntervalSet::from_predicate(std::vector<Rational> cuts, const std::function<bool(const Rational&)>& inside) {
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    if (cuts.empty()) return inside(Rational(0)) ? real_line() : IntervalSet();
    std::vector<Interval> parts;
    auto gap = [&](ExtRational lo, ExtRational hi, const Rational& probe) {
        if (inside(probe)) parts.push_back(Interval{std::move(lo), false, std::move(hi), false});
    };
    gap(ExtRational::minus_infinity(), ExtRational::finite(cuts.front()), cuts.front() - 1);
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        if (inside(cuts[i])) parts.push_back(Interval{ExtRational::finite(cuts[i]), true, ExtRational::finite(cuts[i]), true});
        if (i + 1 < cuts.size()) {
            gap(ExtRational::finite(cuts[i]), ExtRational::finite(cuts[i + 1]), (cuts[i] + cuts[i + 1]) / 2);
        }
    }
    gap(ExtRational::finite(cuts.back()), ExtRational::plus_infinity(), cuts.back() + 1);
    return IntervalSet(std::move(parts));
}

bool IntervalSet::contains(const Rational& q) const {
    return std::any_of(components_.begin(), components_.end(), [&](const Interval& c) { return c.contains(q); });
}

bool IntervalSet::bounded_above() const { return components_.empty() || components_.back().hi.is_finite(); }
bool IntervalSet::bounded_below() const { return components_.empty() || components_.front().lo.is_finite(); }

std::vector<Rational> IntervalSet::finite_endpoints() const {
    std::vector<Rational> out;
    for (const auto& c : components_) {
        if (c.lo.is_finite()) out.push_back(c.lo.value);
        if (c.hi.is_finite() && !(c.hi == c.lo)) out.push_back(c.hi.value);
    }
    return out;
}

std::vector<Rational> IntervalSet::samples() const {
    std::vector<Rational> out;
    for (const auto& c : components_) {
        if (c.lo.is_finite() && c.hi.is_finite()) {
            if (c.lo_closed) out.push_back(c.lo.value);
            if (c.lo == c.hi) continue;
            Rational width = c.hi.value - c.lo.value;
            for (int j = 1; j <= 3; ++j) out.push_back(c.lo.value + width * j / 4);
            if (c.hi_closed) out.push_back(c.hi.value);
        } else if (c.hi.is_finite()) {
            out.push_back(c.hi.value - 2);
            out.push_back(c.hi.value - 1);
            if (c.hi_closed) out.push_back(c.hi.value);
        } else if (c.lo.is_finite()) {
            if (c.lo_closed) out.push_back(c.lo.value);
            out.push_back(c.lo.value + 1);
            out.push_back(c.lo.value + 2);
        } else {
            out.insert(out.end(), {Rational(-1), Rational(0), Rational(1)});
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string IntervalSet::str() const {
    if (components_.empty()) return "empty";
    std::string out;
    for (const auto& c : components_) {
        if (!out.empty()) out += " U ";
        out += c.str();
    }
    return out;
}

namespace {

std::vector<Rational> joint_cuts(const IntervalSet& a, const IntervalSet& b) {
    auto cuts = a.finite_endpoints();
    auto more = b.finite_endpoints();
    cuts.insert(cuts.end(), more.begin(), more.end());
    return cuts;
}

}  // namespace

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    return IntervalSet::from_predicate(joint_cuts(a, b), [&](const Rational& q) { return a.contains(q) || b.contains(q); });
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    return IntervalSet::from_predicate(joint_cuts(a, b), [&](const Rational& q) { return a.contains(q) && b.contains(q); });
}

IntervalSet subtract(const IntervalSet& a, const IntervalSet& b) {
    return IntervalSet::from_predicate(joint_cuts(a, b), [&](const Rational& q) { return a.contains(q) && !b.contains(q); });
}

IntervalSet complement(const IntervalSet& a) {
    return IntervalSet::from_predicate(a.finite_endpoints(), [&](const Rational& q) { return !a.contains(q); });
}

// ---------------------------------------------------------------- parsing

namespace {

class SetParser {
public:
    SetParser(std::string_view src, std::vector<std::string>* warnings) : src_(src), warnings_(warnings) {}

    IntervalSet parse() {
        skip();
        if (keyword("empty")) {
            finish();
            return {};
        }
        std::vector<Interval> parts;
        for (;;) {
            skip();
            if (keyword("R")) {
                parts.push_back(IntervalSet::real_line().components().front());
            } else {
                interval(parts);
            }
            skip();
            if (at_end()) break;
            if (src_[pos_] != 'U') throw SyntaxError(pos_, "expected 'U' between intervals");
            ++pos_;
        }
        return IntervalSet(std::move(parts));
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    void finish() {
        skip();
        if (!at_end()) throw SyntaxError(pos_, "unexpected trailing text");
    }
    bool keyword(std::string_view word) {
        if (src_.substr(pos_, word.size()) != word) return false;
        std::size_t end = pos_ + word.size();
        if (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) return false;
        pos_ = end;
        return true;
    }
    void expect(char c) {
        skip();
        if (at_end() || src_[pos_] != c) throw SyntaxError(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    ExtRational endpoint() {
        skip();
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '-' ||
                             src_[pos_] == '+' || src_[pos_] == '/' || src_[pos_] == '.')) {
            ++pos_;
        }
        std::string_view tok = src_.substr(start, pos_ - start);
        if (tok.empty()) throw SyntaxError(start, "expected endpoint");
        if (tok == "inf" || tok == "+inf") return ExtRational::plus_infinity();
        if (tok == "-inf") return ExtRational::minus_infinity();
        try {
            return ExtRational::finite(parse_rational(tok));
        } catch (const Error&) {
            throw SyntaxError(start, "malformed endpoint '" + std::string(tok) + "'");
        }
    }

    void interval(std::vector<Interval>& parts) {
        skip();
        if (at_end() || (src_[pos_] != '(' && src_[pos_] != '[')) throw SyntaxError(pos_, "expected '(' or '['");
        std::size_t start = pos_;
        bool lo_closed = src_[pos_++] == '[';
        ExtRational lo = endpoint();
        expect(',');
        std::size_t hi_at = pos_;
        ExtRational hi = endpoint();
        skip();
        if (at_end() || (src_[pos_] != ')' && src_[pos_] != ']')) throw SyntaxError(pos_, "expected ')' or ']'");
        bool hi_closed = src_[pos_++] == ']';
        if ((lo_closed && !lo.is_finite()) || (hi_closed && !hi.is_finite())) {
            throw SyntaxError(lo_closed && !lo.is_finite() ? start : hi_at, "infinite endpoint must be open");
        }
        Interval iv{lo, lo_closed, hi, hi_closed};
        if (hi < lo || (lo == hi && !(lo_closed && hi_closed))) {
            if (warnings_) {
                warnings_->push_back(std::string(to_string(ErrorKind::EmptyInterval)) + ": " + iv.str() + " is empty");
            }
            return;
        }
        parts.push_back(std::move(iv));
    }

    std::string_view src_;
    std::vector<std::string>* warnings_;
    std::size_t pos_ = 0;
};

}  // namespace

IntervalSet parse_set(std::string_view src, std::vector<std::string>* warnings) { return SetParser(src, warnings).parse(); }

// ---------------------------------------------------------------- monads

namespace {

/// Sign of x - q: 0 only when the difference is exactly zero.
int side(const Value& x, const Rational& q) {
    Value d = x - Value(Series::constant(Coefficient(q)));
    Analysis a = analyze(d);
    if (a.sign == Sign::Positive) return 1;
    if (a.sign == Sign::Negative) return -1;
    if (d.is_series() && d.series().is_exact_zero()) return 0;
    if (a.category == Category::Zero) {
        fail(ErrorKind::InsufficientPrecision, "side of " + x.str() + " relative to " + q.str() + " is not determined");
    }
    fail(ErrorKind::Undecidable, "side of " + x.str() + " relative to " + q.str() + " oscillates");
}

int relation(const Coefficient& s, const ExtRational& e) {
    if (e.infinity) return -e.infinity;
    return (s - Coefficient(e.value)).sign();
}

}  // namespace

bool star_member(const Value& x, const IntervalSet& s) {
    if (s.empty()) return false;
    Analysis a = analyze(x);
    if (a.category == Category::Infinite) {
        return a.sign == Sign::Positive ? !s.bounded_above() : !s.bounded_below();
    }
    const Coefficient st = standard_part(x).value;
    for (const auto& c : s.components()) {
        int lo = relation(st, c.lo);
        int hi = relation(st, c.hi);
        if (lo < 0 || hi > 0) continue;
        if (lo > 0 && hi < 0) return true;
        int dir = side(x, lo == 0 ? c.lo.value : c.hi.value);
        if (dir == 0) return (lo != 0 || c.lo_closed) && (hi != 0 || c.hi_closed);
        if (dir > 0 && hi < 0) return true;
        if (dir < 0 && lo > 0) return true;
    }
    return false;
}

SetReport set_report(const IntervalSet& s) {
    SetReport r;
    const Series rho = Series::rho();
    auto near = [&](const Rational& q, int dir) {
        return Value(Series::constant(Coefficient(q)) + (dir > 0 ? rho : -rho));
    };
    r.open = true;
    r.closure = s;
    r.interior = s;
    for (const auto& e : s.finite_endpoints()) {
        bool right = star_member(near(e, 1), s);
        bool left = star_member(near(e, -1), s);
        bool in = s.contains(e);
        if (in && !(left && right)) {
            r.open = false;
            r.interior = subtract(r.interior, IntervalSet::point(e));
        }
        if (!in && (left || right)) r.closure = unite(r.closure, IntervalSet::point(e));
    }
    r.closed = r.closure == s;
    const Value big = reciprocal(rho, Context{});
    r.bounded = !star_member(big, s) && !star_member(-big, s);
    r.compact = r.closed && r.bounded;

    std::vector<Value> probes{big, -big};
    for (const auto& e : s.finite_endpoints()) {
        probes.push_back(near(e, 1));
        probes.push_back(near(e, -1));
    }
    for (const auto& q : s.samples()) probes.push_back(Series::constant(Coefficient(q)));
    r.compact_by_monads = std::all_of(probes.begin(), probes.end(), [&](const Value& p) {
        if (!star_member(p, s)) return true;
        ExtReal st = standard_part(p);
        return st.is_finite() && s.contains(st.value.exact());
    });
    return r;
}

}  // namespace hypercalc
