#include "doctest.h"
#include "support.hpp"

using namespace hypercalc;

TEST_CASE("parse and print") {
    CHECK(parse_function("x^3").str() == "x^3");
    CHECK(parse_function("(x + 1) * (x - 1)").str() == "(x+1)*(x-1)");
    CHECK(parse_function("-x^2").str() == "-x^2");
    CHECK(parse_function("(-x)^2").str() == "(-x)^2");
    CHECK(parse_function("x^-1").str() == "x^-1");
    CHECK(parse_function("2^3^2").str() == "2^3^2");
    CHECK(parse_function("a - (b - c)", {"a", "b", "c"}).str() == "a-(b-c)");
    CHECK(parse_function("0.25*x").str() == "0.25*x");
    CHECK(parse_function("x/3*2").str() == "x/3*2");
    CHECK(parse_function("sin(x)/x").str() == "sin(x)/x");
    CHECK(parse_function("exp(-(x-n)^2)").str() == "exp(-(x-n)^2)");
}

TEST_CASE("round trip on a corpus") {
    for (const char* src : {"x/(1+x)", "sqrt(n+1)/n", "(1/n)*sin(n*x)", "(1/n)*exp(-(x-n)^2)", "abs(x)/x",
                            "x^n", "1-d^(1/2)", "2*x^2-3*x+1", "ln(abs(x))+cos(2*x)", "x^(1/3)", "-(-x)"}) {
        FuncExpr f = parse_function(src);
        CHECK(parse_function(f.str()) == f);
    }
}

TEST_CASE("syntax and identifier errors") {
    CHECK_THROWS_AS(parse_function("x+"), SyntaxError);
    CHECK_THROWS_AS(parse_function("(x"), SyntaxError);
    CHECK_THROWS_AS(parse_function("2 x"), SyntaxError);
    try {
        parse_function("tan(x)");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownIdentifier);
    }
    try {
        parse_function("y+1");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownIdentifier);
    }
}

TEST_CASE("evaluation") {
    Context ctx;
    Env env{{"x", Value(Series::constant(2) + Series::rho())}};
    CHECK(eval(parse_function("x^2"), env, ctx).str() == "4 + 4*d^1 + 1*d^2");
    CHECK(eval(parse_function("x*d"), env, ctx).str() == "2*d^1 + 1*d^2");
    CHECK(constant_value(parse_function("1/2+1/3")) == Rational(5, 6));
    CHECK_FALSE(constant_value(parse_function("x+1")).has_value());
    CHECK_FALSE(constant_value(parse_function("d")).has_value());
}

TEST_CASE("evaluation errors carry the path") {
    Context ctx;
    Env env{{"x", Value(Series::constant(0))}};
    try {
        (void)eval(parse_function("1+1/x"), env, ctx);
        FAIL("expected an error");
    } catch (const EvalError& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
        CHECK(e.path() == "/rhs");
    }
    try {
        (void)eval(parse_function("x+1"), {}, ctx);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownIdentifier);
    }
}
