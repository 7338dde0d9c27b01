#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercalc/expr.hpp"
#include "hypercalc/topology.hpp"

namespace hypercalc {

/// Concrete non-standard values substituted for "every infinitesimal dx" and
/// "every infinite index". rho^-1 stands in for a hypernatural.
struct ProbeCatalog {
    std::vector<Series> infinitesimals;
    std::vector<Series> infinite;

    /// rho, -rho, rho^2, -rho^2, rho^(1/2), rho+rho^2 and
    /// rho^-1, rho^-1+rho, 2rho^-1, rho^-2.
    static const ProbeCatalog& standard();
    /// Throws InvalidArgument unless every infinitesimal probe is a nonzero
    /// infinitesimal and every infinite probe is positive infinite.
    void validate() const;
    /// point + dx for every infinitesimal probe dx.
    std::vector<Series> near(const Rational& point) const;
};

struct Binding {
    std::string name;
    Value value;
};

/// One probe evaluation; `value` is empty when the probe was skipped.
struct Observation {
    std::vector<Binding> at;
    std::optional<Value> value;
    std::string note;
};

struct Verdict {
    enum class Kind { Holds, Refuted, Inconclusive };
    Kind kind = Kind::Holds;
    std::string reason;
    std::vector<Binding> witness;
    std::size_t probes = 0;
    std::vector<Observation> observations;
};

std::string_view to_string(Verdict::Kind k);

struct LimitResult {
    enum class Kind { Value, NoLimit, Inconclusive };
    Kind kind = Kind::Value;
    ExtReal value;
    std::string reason;
    std::vector<Binding> witness;
    std::vector<Observation> observations;
};

struct DerivativeResult {
    enum class Kind { Value, NoDerivative, Inconclusive };
    Kind kind = Kind::Value;
    ExtReal value;
    std::string reason;
    std::vector<Binding> witness;
    std::vector<Observation> observations;
};

enum class Side { Both, Left, Right };

struct LimitTarget {
    enum class Kind { Point, PlusInfinity, MinusInfinity };
    Kind kind = Kind::Point;
    Rational point;
    Side side = Side::Both;

    static LimitTarget at(Rational c, Side side = Side::Both) { return {Kind::Point, std::move(c), side}; }
    static LimitTarget plus_infinity() { return {Kind::PlusInfinity, {}, Side::Both}; }
    static LimitTarget minus_infinity() { return {Kind::MinusInfinity, {}, Side::Both}; }
};

/// k-th derivative at c read from the Taylor coefficients of f(c + rho), with
/// the mirrored probe c - rho and, for k = 1, every catalog difference quotient
/// as cross-checks.
DerivativeResult derivative(const FuncExpr& f, const Rational& c, unsigned k, const Context& ctx,
                            const ProbeCatalog& catalog = ProbeCatalog::standard());

LimitResult limit(const FuncExpr& f, const LimitTarget& target, const Context& ctx,
                  const IntervalSet& domain = IntervalSet::real_line(),
                  const ProbeCatalog& catalog = ProbeCatalog::standard(), const std::string& var = "x");

/// Limit of a_n over the infinite probes, treating a as a real function of n.
LimitResult seq_limit(const FuncExpr& a, const Context& ctx, const ProbeCatalog& catalog = ProbeCatalog::standard());

Verdict continuity_at(const FuncExpr& f, const Rational& c, const Context& ctx,
                      const IntervalSet& domain = IntervalSet::real_line(),
                      const ProbeCatalog& catalog = ProbeCatalog::standard());

Verdict uniform_continuity_probe(const FuncExpr& f, const IntervalSet& domain, const Context& ctx,
                                 const ProbeCatalog& catalog = ProbeCatalog::standard());

enum class ConvergenceMode { Pointwise, Uniform };

Verdict convergence_probe(const FuncExpr& family, const IntervalSet& domain, const FuncExpr& limit_expr,
                          ConvergenceMode mode, const Context& ctx,
                          const ProbeCatalog& catalog = ProbeCatalog::standard());

/// Equality of standard values: exact for rationals, within 10^-(digits/2)
/// when a decimal is involved.
bool close(const ExtReal& a, const ExtReal& b, const Context& ctx);

}  // namespace hypercalc
