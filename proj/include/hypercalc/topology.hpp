#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercalc/value.hpp"

namespace hypercalc {

/// Rational or one of -inf, +inf.
struct ExtRational {
    int infinity = 0;  // -1, 0, +1
    Rational value;

    static ExtRational finite(Rational q) { return {0, std::move(q)}; }
    static ExtRational minus_infinity() { return {-1, {}}; }
    static ExtRational plus_infinity() { return {1, {}}; }
    bool is_finite() const { return infinity == 0; }
    std::string str() const;

    friend bool operator==(const ExtRational& a, const ExtRational& b) {
        return a.infinity == b.infinity && (a.infinity != 0 || a.value == b.value);
    }
    friend bool operator<(const ExtRational& a, const ExtRational& b) {
        if (a.infinity != b.infinity) return a.infinity < b.infinity;
        return a.infinity == 0 && a.value < b.value;
    }
};

struct Interval {
    ExtRational lo;
    bool lo_closed = false;
    ExtRational hi;
    bool hi_closed = false;

    bool contains(const Rational& q) const;
    std::string str() const;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of pairwise disjoint, non-adjacent intervals in increasing
/// order. Infinite endpoints are always open.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> components);

    static IntervalSet real_line();
    static IntervalSet point(const Rational& q);
    /// Union of the cells of the partition induced by `cuts` on which `inside`
    /// holds; `inside` is asked about each cut point and one point per gap.
    static IntervalSet from_predicate(std::vector<Rational> cuts, const std::function<bool(const Rational&)>& inside);

    const std::vector<Interval>& components() const noexcept { return components_; }
    bool empty() const noexcept { return components_.empty(); }
    bool contains(const Rational& q) const;
    bool bounded_above() const;
    bool bounded_below() const;
    std::vector<Rational> finite_endpoints() const;
    /// Deterministic standard points of the set: closed endpoints, interior
    /// quarter points of bounded components, and a few points of unbounded ones.
    std::vector<Rational> samples() const;

    std::string str() const;
    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> components_;
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet subtract(const IntervalSet& a, const IntervalSet& b);
IntervalSet complement(const IntervalSet& a);

/// Grammar: set = "empty" | "R" | interval { "U" interval }, with intervals
/// written (a,b), [a,b], (a,b], [a,b) and endpoints rational, inf or -inf.
/// A reversed or empty interval contributes nothing and is reported in
/// `warnings` as EmptyInterval.
IntervalSet parse_set(std::string_view src, std::vector<std::string>* warnings = nullptr);

/// Membership of a non-standard value in *S, decided from its standard part
/// and, at an endpoint, from the side it lies on.
bool star_member(const Value& x, const IntervalSet& s);

struct SetReport {
    bool open = false;
    bool closed = false;
    bool bounded = false;
    bool compact = false;
    /// Compactness re-derived from *S being inside the monads of S.
    bool compact_by_monads = false;
    IntervalSet closure;
    IntervalSet interior;
};

SetReport set_report(const IntervalSet& s);

}  // namespace hypercalc
