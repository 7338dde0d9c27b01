#include <algorithm>
#include <functional>

#include "doctest.h"
#include "hypercalc/error.hpp"
#include "hypercalc/filters.hpp"

using namespace hypercalc;

TEST_CASE("family parsing") {
    SetFamily f = parse_family(3, "{1},{1,2}, {1,3},{1,2,3},{1}");
    CHECK(f.size() == 4);
    CHECK(f.str() == "{1},{1,2},{1,3},{1,2,3}");
    CHECK(parse_family(2, "{}").str() == "{}");
    CHECK_THROWS_AS(parse_family(2, "{3}"), SyntaxError);
    CHECK_THROWS_AS(parse_family(2, "{1"), SyntaxError);
    CHECK_THROWS_AS(SetFamily(17), Error);
}

TEST_CASE("filter axioms") {
    CHECK(is_filter(principal(3, 1)).ok());
    CHECK(is_filter(parse_family(3, "{},{1}")).violated == FilterAxiom::EmptySet);
    CHECK(is_filter(parse_family(2, "{1,2}")).ok());
    CHECK(is_filter(SetFamily(2)).violated == FilterAxiom::Nonempty);
    CHECK(is_filter(parse_family(3, "{1,2},{2,3},{1,2,3}")).violated == FilterAxiom::Intersection);
    CHECK(is_filter(parse_family(3, "{1}")).violated == FilterAxiom::Superset);
    // Every subset of a finite set has finite complement.
    CHECK(is_filter(frechet(4)).violated == FilterAxiom::EmptySet);
}

TEST_CASE("ultrafilters") {
    CHECK(is_ultrafilter(principal(3, 2)));
    CHECK_FALSE(is_ultrafilter(parse_family(2, "{1,2}")));
    try {
        (void)is_ultrafilter(parse_family(3, "{1}"));
        FAIL("expected NotAFilter");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAFilter);
    }
    for (unsigned n = 1; n <= 4; ++n) {
        auto all = enumerate_ultrafilters(n);
        CHECK(all.size() == n);
        for (const auto& u : all) CHECK(principal_point(u).has_value());
    }
}

TEST_CASE("every filter extends to an ultrafilter") {
    for (unsigned n = 1; n <= 4; ++n) {
        auto filters = enumerate_filters(n);
        CHECK(filters.size() == (1u << n) - 1);
        auto ultras = enumerate_ultrafilters(n);
        for (const auto& f : filters) {
            bool extends = std::any_of(ultras.begin(), ultras.end(), [&](const SetFamily& u) {
                return std::all_of(f.members().begin(), f.members().end(), [&](Mask m) { return u.contains(m); });
            });
            CHECK(extends);
            CHECK(is_ultrafilter(f) == is_maximal_filter(f));
        }
    }
}

TEST_CASE("partition corollary") {
    CHECK(partition_check(principal(3, 2), parse_masks(3, "{1},{2},{3}")) == 1);
    CHECK(partition_check(principal(3, 3), parse_masks(3, "{1,2},{3}")) == 1);
    auto kind = [](const std::function<void()>& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    CHECK(kind([] { (void)partition_check(principal(3, 1), parse_masks(3, "{1,2},{2,3}")); }) == ErrorKind::NotDisjoint);
    CHECK(kind([] { (void)partition_check(principal(3, 1), parse_masks(3, "{2},{3}")); }) == ErrorKind::UnionNotInFilter);
}
