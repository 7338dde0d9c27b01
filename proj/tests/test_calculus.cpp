#include "doctest.h"
#include "support.hpp"

using namespace hypercalc;

namespace {

LimitResult lim(const std::string& f, LimitTarget t, const Context& ctx = exact(), const IntervalSet& dom = IntervalSet::real_line()) {
    return limit(parse_function(f), t, ctx, dom);
}

std::string witness(const Verdict& v, const std::string& name) {
    for (const auto& b : v.witness) {
        if (b.name == name) return b.value.str();
    }
    return "";
}

}  // namespace

TEST_CASE("probe catalog") {
    const auto& c = ProbeCatalog::standard();
    CHECK(c.infinitesimals.size() == 6);
    CHECK(c.infinite.size() == 4);
    CHECK_NOTHROW(c.validate());
    for (const auto& p : c.infinitesimals) CHECK(classify(p).category == Category::Infinitesimal);
    for (const auto& p : c.infinite) CHECK(classify(p).str() == "Infinite(+)");
    ProbeCatalog bad = c;
    bad.infinite.push_back(Series::rho());
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("limits") {
    CHECK(lim("x/(1+x)", LimitTarget::at(1)).value.str() == "1/2");
    CHECK(lim("sin(x)/x", LimitTarget::plus_infinity()).value.str() == "0");
    CHECK(lim("x", LimitTarget::at(0)).value.str() == "0");
    CHECK(lim("sin(x)/x", LimitTarget::at(0)).value.str() == "1");
    auto r = lim("1/x", LimitTarget::at(0));
    CHECK(r.kind == LimitResult::Kind::NoLimit);
    REQUIRE(r.witness.size() == 4);
    CHECK(r.witness[0].value.str() == "1*d^1");
    CHECK(r.witness[1].value.str() == "1*d^(-1)");
    CHECK(r.witness[2].value.str() == "-1*d^1");
    CHECK(lim("1/x", LimitTarget::at(0, Side::Right)).value.str() == "+inf");
    CHECK(lim("1/x", LimitTarget::at(0, Side::Left)).value.str() == "-inf");
    CHECK(lim("abs(x)/x", LimitTarget::at(0, Side::Left)).value.str() == "-1");
    CHECK(lim("sin(1/x)", LimitTarget::at(0), decimal()).kind == LimitResult::Kind::Inconclusive);
    CHECK(lim("x^2", LimitTarget::minus_infinity()).value.str() == "+inf");
}

TEST_CASE("limit domain handling") {
    // Probes outside the declared domain are skipped.
    CHECK(lim("sqrt(x)", LimitTarget::at(0), exact(), parse_set("[0,inf)")).value.str() == "0");
    CHECK_THROWS_AS(lim("x", LimitTarget::at(5), exact(), parse_set("[0,1]")), Error);
    CHECK_THROWS_AS(lim("x", LimitTarget::plus_infinity(), exact(), parse_set("[0,1]")), Error);
}

TEST_CASE("sequence limits") {
    CHECK(seq_limit(parse_function("(n+5)/(n+3)"), exact()).value.str() == "1");
    CHECK(seq_limit(parse_function("sqrt(n+1)/n"), decimal()).value.str() == "0");
    CHECK(seq_limit(parse_function("5"), exact()).value.str() == "5");
    CHECK(seq_limit(parse_function("n"), exact()).value.str() == "+inf");
    CHECK(seq_limit(parse_function("(1+1/n)^n"), decimal()).value.str().substr(0, 12) == "2.7182818284");
}

TEST_CASE("derivatives") {
    auto d = [](const std::string& f, const Rational& c, unsigned k = 1, const Context& ctx = exact()) {
        return derivative(parse_function(f), c, k, ctx);
    };
    CHECK(d("x^3", 2).value.str() == "12");
    CHECK(d("7", 5).value.str() == "0");
    CHECK(d("sin(x)", 0).value.str() == "1");
    CHECK(d("sin(x)", 0, 3).value.str() == "-1");
    CHECK(d("x^5", 1, 5).value.str() == "120");
    CHECK(d("1/x", 2).value.str() == "-1/4");
    auto a = d("abs(x)", 0);
    CHECK(a.kind == DerivativeResult::Kind::NoDerivative);
    CHECK(d("sqrt(x)", 0).kind == DerivativeResult::Kind::NoDerivative);
    Context low;
    low.order = 2;
    CHECK_THROWS_AS(derivative(parse_function("x^3"), 1, 2, low), Error);
    CHECK_THROWS_AS(d("1/x", 0), Error);
    // cos(c) at a sampled point, decimal backend.
    std::string v = d("sin(x)", 1, 1, decimal()).value.str();
    CHECK(v.substr(0, 20) == "0.540302305868139717");
}

TEST_CASE("power rule and chain rule") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 8; ++n) {
        Rational c = random_rational(rng, 5, 7);
        Rational expected = Rational(n) * pow(c, n - 1);
        CHECK(derivative(parse_function("x^" + std::to_string(n)), c, 1, exact()).value.value == Coefficient(expected));
    }
    // (g(x))^2 + g(x) with g = x^2 - 3x; f(u) = u^2 + u
    for (int i = 0; i < 10; ++i) {
        Rational c = random_rational(rng, 4, 5);
        Rational g = c * c - 3 * c;
        Rational expected = (2 * g + 1) * (2 * c - 3);
        auto r = derivative(parse_function("(x^2-3*x)^2+(x^2-3*x)"), c, 1, exact());
        CHECK(r.value.value == Coefficient(expected));
    }
}

TEST_CASE("probe independence") {
    for (const char* f : {"x/(1+x)", "x^2-2*x", "(x^2-1)/(x-1)", "1/(2+x)"}) {
        for (const auto& dx : ProbeCatalog::standard().infinitesimals) {
            Value v = eval(parse_function(f), {{"x", Value(Series::constant(1) + dx)}}, exact());
            Value w = eval(parse_function(f), {{"x", Value(Series::constant(1) + Series::rho())}}, exact());
            CHECK(standard_part(v) == standard_part(w));
        }
    }
}

TEST_CASE("continuity") {
    CHECK(continuity_at(parse_function("x"), 3, exact()).kind == Verdict::Kind::Holds);
    auto v = continuity_at(parse_function("1/x"), 2, exact());
    CHECK(v.kind == Verdict::Kind::Holds);
    CHECK(v.reason == "no counterexample found among 6 probes");
    CHECK_THROWS_AS(continuity_at(parse_function("x/abs(x)"), 0, exact()), Error);
    // Sign function declared on [0,inf) with value 1 at 0 on the right only.
    auto step = continuity_at(parse_function("(x+abs(x))/(2*x+d)"), 0, exact());
    CHECK(step.kind == Verdict::Kind::Refuted);
    CHECK_THROWS_AS(continuity_at(parse_function("x"), 5, exact(), parse_set("[0,1]")), Error);
}

TEST_CASE("continuity agrees with limits") {
    for (const char* f : {"x^2", "1/(1+x^2)", "abs(x)", "x/(1+x)", "(x+abs(x))/(2*x+d)"}) {
        for (int c : {-2, 0, 2}) {
            auto v = continuity_at(parse_function(f), c, exact());
            auto l = limit(parse_function(f), LimitTarget::at(c), exact());
            Value fc = eval(parse_function(f), {{"x", Value(Series::constant(c))}}, exact());
            bool agrees = l.kind == LimitResult::Kind::Value && close(l.value, standard_part(fc), exact()) &&
                          classify(fc).category != Category::Infinite;
            CHECK((v.kind == Verdict::Kind::Holds) == agrees);
        }
    }
}

TEST_CASE("uniform continuity") {
    auto inv = uniform_continuity_probe(parse_function("1/x"), parse_set("(0,inf)"), exact());
    CHECK(inv.kind == Verdict::Kind::Refuted);
    CHECK(witness(inv, "x") == "1*d^1");
    CHECK(witness(inv, "x'") == "1*d^2");
    CHECK(witness(inv, "gap") == "1*d^(-2) - 1*d^(-1)");
    auto e = uniform_continuity_probe(parse_function("exp(x)"), IntervalSet::real_line(), decimal());
    CHECK(e.kind == Verdict::Kind::Refuted);
    CHECK(witness(e, "x") == "1*d^(-1)");
    CHECK(witness(e, "x'") == "1*d^(-1) + 1*d^1");
    auto s = uniform_continuity_probe(parse_function("sin(x)"), IntervalSet::real_line(), decimal());
    CHECK(s.kind == Verdict::Kind::Holds);
    CHECK(s.reason.rfind("no counterexample found among", 0) == 0);
    CHECK(uniform_continuity_probe(parse_function("x^2"), parse_set("[0,1]"), exact()).kind == Verdict::Kind::Holds);
    CHECK(uniform_continuity_probe(parse_function("x^2"), IntervalSet::real_line(), exact()).kind == Verdict::Kind::Refuted);
    CHECK(uniform_continuity_probe(parse_function("sqrt(x)"), parse_set("[0,inf)"), decimal()).kind == Verdict::Kind::Holds);
    CHECK_THROWS_AS(uniform_continuity_probe(parse_function("x"), IntervalSet(), exact()), Error);
}

TEST_CASE("convergence") {
    auto probe = [](const char* fam, const char* dom, ConvergenceMode m, const char* lim = "0") {
        return convergence_probe(parse_function(fam), parse_set(dom), parse_function(lim), m, decimal());
    };
    auto u = probe("x^n", "[0,1)", ConvergenceMode::Uniform);
    CHECK(u.kind == Verdict::Kind::Refuted);
    CHECK(witness(u, "x") == "1 - 1*d^1");
    CHECK(witness(u, "n") == "1*d^(-1)");
    CHECK(probe("x^n", "[0,1)", ConvergenceMode::Pointwise).kind == Verdict::Kind::Holds);
    CHECK(probe("x^n", "[0,9/10]", ConvergenceMode::Uniform).kind == Verdict::Kind::Holds);
    CHECK(probe("(1/n)*sin(n*x)", "R", ConvergenceMode::Uniform).kind == Verdict::Kind::Holds);
    CHECK(probe("exp(-(x-n)^2)", "R", ConvergenceMode::Pointwise).kind == Verdict::Kind::Holds);
    auto g = probe("exp(-(x-n)^2)", "R", ConvergenceMode::Uniform);
    CHECK(g.kind == Verdict::Kind::Refuted);
    CHECK(witness(g, "x") == "1*d^(-1)");
    CHECK(probe("(1/n)*exp(-(x-n)^2)", "R", ConvergenceMode::Uniform).kind == Verdict::Kind::Holds);
    CHECK(probe("x/n", "[0,1]", ConvergenceMode::Uniform).kind == Verdict::Kind::Holds);
    CHECK(probe("x/n", "R", ConvergenceMode::Uniform).kind == Verdict::Kind::Refuted);
    CHECK(probe("x+1/n", "R", ConvergenceMode::Uniform, "x").kind == Verdict::Kind::Holds);
}

TEST_CASE("uniform convergence implies pointwise") {
    for (const char* fam : {"x^n", "x/n", "(1/n)*sin(n*x)", "exp(-(x-n)^2)", "1/(1+n*x^2)", "x^2/n"}) {
        for (const char* dom : {"[0,1)", "[0,1/2]", "R"}) {
            auto u = convergence_probe(parse_function(fam), parse_set(dom), parse_function("0"), ConvergenceMode::Uniform, decimal());
            auto p = convergence_probe(parse_function(fam), parse_set(dom), parse_function("0"), ConvergenceMode::Pointwise, decimal());
            if (u.kind == Verdict::Kind::Holds) CHECK(p.kind == Verdict::Kind::Holds);
        }
    }
}

TEST_CASE("close") {
    Context ctx;
    CHECK(close(ExtReal::finite(Coefficient(Rational(1, 3))), ExtReal::finite(Coefficient(Rational(1, 3))), ctx));
    CHECK_FALSE(close(ExtReal::finite(Coefficient(1)), ExtReal::finite(Coefficient(2)), ctx));
    CHECK(close(ExtReal::plus_infinity(), ExtReal::plus_infinity(), ctx));
    CHECK_FALSE(close(ExtReal::plus_infinity(), ExtReal::minus_infinity(), ctx));
    Coefficient third = Coefficient::decimal(Rational(1, 3), 50);
    CHECK(close(ExtReal::finite(third), ExtReal::finite(Coefficient(Rational(1, 3))), ctx));
}
