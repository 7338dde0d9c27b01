#include "doctest.h"
#include "support.hpp"

using namespace hypercalc;

TEST_CASE("series normalization and printing") {
    Series s({{Rational(2), Coefficient(2)}, {Rational(0), Coefficient(1)}, {Rational(1, 2), Coefficient(Rational(-3, 2))}, {Rational(5), Coefficient(0)}},
             Rational(7, 2));
    CHECK(s.str() == "1 - 3/2*d^(1/2) + 2*d^2 + O(d^(7/2))");
    CHECK(Series::parse(s.str()) == s);
    CHECK(Series::rho().str() == "1*d^1");
    CHECK(Series::zero().str() == "0");
    CHECK(Series::big_o(Rational(3)).str() == "O(d^3)");
    CHECK(Series::monomial(Coefficient(1), Rational(-1)).str() == "1*d^(-1)");
    // Terms at or above the bound are dropped.
    Series t({{Rational(4), Coefficient(1)}, {Rational(1), Coefficient(1)}}, Rational(3));
    CHECK(t.str() == "1*d^1 + O(d^3)");
}

TEST_CASE("bound propagation") {
    Series a = S("1 + 1*d^1 + O(d^4)");
    Series b = S("2 + O(d^2)");
    CHECK((a + b).bound() == Rational(2));
    // min(4 + 0, 2 + 0)
    CHECK((a * b).bound() == Rational(2));
    Series c = S("1*d^1 + O(d^3)");
    // min(3 + 0, 4 + 1)
    CHECK((a * c).bound() == Rational(3));
    CHECK((Series::rho() * Series::rho()).is_exact());
}

TEST_CASE("coefficient access respects the bound") {
    Series a = S("1 + 2*d^1 + O(d^3)");
    CHECK(a.coefficient(Rational(1)) == Coefficient(2));
    CHECK(a.coefficient(Rational(2)) == Coefficient(0));
    CHECK_THROWS_AS(a.coefficient(Rational(3)), Error);
    try {
        (void)a.coefficient(Rational(3));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InsufficientPrecision);
    }
    CHECK_THROWS(Series::big_o(Rational(1)).sign());
}

TEST_CASE("reciprocal and division") {
    Context ctx;
    ctx.order = 6;
    Series one_plus = Series::constant(1) + Series::rho();
    Series r = reciprocal(one_plus, ctx);
    CHECK(r.str() == "1 - 1*d^1 + 1*d^2 - 1*d^3 + 1*d^4 - 1*d^5 + O(d^6)");
    CHECK(reciprocal(Series::rho(), ctx).str() == "1*d^(-1)");
    CHECK_THROWS_AS(reciprocal(Series::zero(), ctx), Error);
    Series q = divide(Series::constant(4) + Series::rho() * Series::rho(), Series::constant(3) + Series::rho(), ctx);
    CHECK(q.coefficient(Rational(0)) == Coefficient(Rational(4, 3)));
}

TEST_CASE("rational powers") {
    Context ctx;
    ctx.order = 4;
    Series s = pow_rational(Series::constant(1) + Series::rho(), Rational(1, 2), ctx);
    CHECK(s.str() == "1 + 1/2*d^1 - 1/8*d^2 + 1/16*d^3 + O(d^4)");
    CHECK(pow_rational(Series::monomial(Coefficient(4), Rational(2)), Rational(1, 2), ctx).str() == "2*d^1");
    CHECK(pow_int(Series::rho() + Series::constant(1), 3, ctx).str() == "1 + 3*d^1 + 3*d^2 + 1*d^3");
    CHECK(pow_int(Series::rho(), -2, ctx).str() == "1*d^(-2)");
}

TEST_CASE("elementary series about zero") {
    Context ctx;
    ctx.order = 5;
    CHECK(sin_infinitesimal(Series::rho(), ctx).str() == "1*d^1 - 1/6*d^3 + O(d^5)");
    CHECK(cos_infinitesimal(Series::rho(), ctx).str() == "1 - 1/2*d^2 + 1/24*d^4 + O(d^5)");
    CHECK(exp_infinitesimal(Series::rho(), ctx).str() == "1 + 1*d^1 + 1/2*d^2 + 1/6*d^3 + 1/24*d^4 + O(d^5)");
    CHECK(log1p_infinitesimal(Series::rho(), ctx).str() == "1*d^1 - 1/2*d^2 + 1/3*d^3 - 1/4*d^4 + O(d^5)");
}

TEST_CASE("constructors carry the order bound") {
    Context ctx;
    CHECK(construct(Rational(5), ctx).bound() == ctx.order);
    CHECK(construct_rho(ctx).str() == "1*d^1 + O(d^16)");
    CHECK_THROWS_AS(construct_term(Coefficient(1), Rational(16), ctx), Error);
}

TEST_CASE("context validation") {
    Context ctx;
    ctx.order = 1;
    CHECK_THROWS_AS(ctx.validate(), Error);
    ctx.order = 2;
    ctx.digits = 15;
    CHECK_THROWS_AS(ctx.validate(), Error);
}
