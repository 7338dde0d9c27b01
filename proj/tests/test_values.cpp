#include "doctest.h"
#include "support.hpp"

using namespace hypercalc;

namespace {
std::string cls(const std::string& src, const Context& ctx = exact()) { return classify(ev(src, ctx)).str(); }
ErrorKind error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvalidArgument;
}
}  // namespace

TEST_CASE("standard parts of the worked examples") {
    CHECK(st_str("5+d") == "5");
    CHECK(st_str("(7+d^5)/(8+sqrt(d))") == "7/8");
    CHECK(st_str("(sqrt(1+d)-1)/d") == "1/2");
    CHECK(st_str("1/(d^2+d)") == "+inf");
    CHECK(st_str("-1/d") == "-inf");
    CHECK(st_str("(4+d^2)/(3+d)") == "4/3");
}

TEST_CASE("classification") {
    CHECK(cls("sin(d)") == "Infinitesimal(+)");
    CHECK(cls("ln(d)") == "Infinite(-)");
    CHECK(cls("exp(1/d)") == "Infinite(+)");
    CHECK(cls("exp(-1/d)") == "Infinitesimal(+)");
    CHECK(cls("0") == "Zero");
    CHECK(cls("3-d") == "FiniteAppreciable(+)");
    CHECK(cls("d*ln(d)") == "Infinitesimal(-)");
    CHECK(cls("d*sin(1/d)") == "Infinitesimal(?)");
    CHECK(error_of([] { (void)classify(ev("sin(1/d)")); }) == ErrorKind::Undecidable);
}

TEST_CASE("magnitudes") {
    auto mag = [](const std::string& s) { return std::string(to_string(analyze(ev(s)).magnitude)); };
    CHECK(mag("exp(1/d)") == "SuperPolyInfinite");
    CHECK(mag("exp(-1/d)") == "SubPolyInfinitesimal");
    CHECK(mag("1/d") == "PolyInfinite");
    CHECK(mag("d^2") == "PolyInfinitesimal");
    CHECK(mag("ln(d)") == "SubPolyInfinite");
    CHECK(mag("1/ln(d)") == "LogInfinitesimal");
    CHECK(mag("2") == "Appreciable");
    CHECK(mag("2+sin(1/d)/2") == "BoundedOscillation");
}

TEST_CASE("escape algebra resolves exactly") {
    CHECK(ev("exp(1/d)*exp(-1/d)").str() == "1");
    CHECK(ev("exp(1/d)-exp(1/d)").str() == "0");
    CHECK(cls("exp(1/d+d)-exp(1/d)") == "Infinite(+)");
    CHECK(cls("sin(1/d+d)-sin(1/d)") == "Infinitesimal(?)");
    CHECK(cls("d*exp(1/d)") == "Infinite(+)");
    CHECK(st_str("sin(1/d)^2+cos(1/d)^2") == "1");
    CHECK(st_str("exp(-(1/d-1/d)^2)") == "1");
    CHECK(cls("d^(1/d)", decimal()) == "Infinitesimal(+)");
    CHECK(cls("(9/10)^(1/d)", decimal()) == "Infinitesimal(+)");
}

TEST_CASE("standard part of an oscillation is undefined") {
    CHECK(error_of([] { (void)standard_part(ev("sin(1/d)")); }) == ErrorKind::Undefined);
    CHECK(st_str("d*sin(1/d)") == "0");
}

TEST_CASE("big-O only values") {
    Value o = Series::big_o(Rational(2));
    CHECK(classify(o).str() == "Zero");
    CHECK(standard_part(o).str() == "0");
    Value a = Series::big_o(Rational(0));
    CHECK(error_of([&] { (void)classify(a); }) == ErrorKind::InsufficientPrecision);
}

TEST_CASE("compare and approx") {
    CHECK(compare(ev("d"), ev("d^2")) == Ordering::Greater);
    CHECK(compare(ev("1/d"), ev("exp(1/d)")) == Ordering::Less);
    CHECK(compare(ev("ln(d)"), ev("-1/d")) == Ordering::Greater);
    CHECK(compare(ev("1+d"), ev("1+d")) == Ordering::Equal);
    CHECK(approx(ev("1+d"), ev("1")));
    CHECK_FALSE(approx(ev("1+d"), ev("2")));
    CHECK(error_of([] { (void)compare(ev("sin(1/d)"), ev("0")); }) == ErrorKind::Undecidable);
}

TEST_CASE("backend behavior") {
    CHECK(error_of([] { (void)ev("exp(1)"); }) == ErrorKind::IrrationalCoefficient);
    std::string e = st_str("exp(1)", decimal());
    CHECK(e.substr(0, 20) == "2.718281828459045235");
    CHECK(st_str("(1-d)^(1/d)", decimal()).substr(0, 22) == "0.36787944117144232159");
    CHECK(st_str("sqrt(4+d)") == "2");
    CHECK(st_str("ln(1+d)") == "0");
}

TEST_CASE("domain errors") {
    CHECK(error_of([] { (void)ev("sqrt(-1)"); }) == ErrorKind::DomainError);
    CHECK(error_of([] { (void)ev("sqrt(-d)"); }) == ErrorKind::DomainError);
    CHECK(error_of([] { (void)ev("ln(0)"); }) == ErrorKind::DomainError);
    CHECK(error_of([] { (void)ev("1/(d-d)"); }) == ErrorKind::DivisionByZero);
    CHECK(error_of([] { (void)ev("(-1)^d"); }) == ErrorKind::DomainError);
}

TEST_CASE("abs") {
    CHECK(ev("abs(-d)").str() == "1*d^1");
    CHECK(st_str("abs(2-d)") == "2");
    CHECK(ev("abs(-exp(1/d))") == ev("exp(1/d)"));
}
