#pragma once

#include <random>
#include <string>

#include "hypercalc/calculus.hpp"

namespace hc = hypercalc;

inline hc::Context exact() { return {}; }
inline hc::Context decimal() { return hc::Context{}.with_backend(hc::Backend::Decimal); }

/// Evaluates an expression in d with optional x binding.
inline hc::Value ev(const std::string& src, const hc::Context& ctx = exact()) {
    return hc::eval(hc::parse_function(src, {}), {}, ctx);
}

inline hc::Series S(const std::string& text) { return hc::Series::parse(text); }
inline hc::Rational Q(const std::string& text) { return hc::parse_rational(text); }

inline std::string st_str(const std::string& src, const hc::Context& ctx = exact()) {
    return hc::standard_part(ev(src, ctx)).str();
}

/// Random rational p/q with |p| <= range*q, q in [1, max_den].
inline hc::Rational random_rational(std::mt19937_64& rng, int range, int max_den) {
    std::uniform_int_distribution<int> den(1, max_den);
    int q = den(rng);
    std::uniform_int_distribution<int> num(-range * q, range * q);
    return hc::Rational(num(rng), q);
}

/// Exact series with 1..3 terms, exponents in halves from min_half/2 to 3.
inline hc::Series random_series(std::mt19937_64& rng, int min_half = -4) {
    std::uniform_int_distribution<int> count(1, 3), half(min_half, 6);
    std::vector<hc::Term> terms;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        hc::Rational c = random_rational(rng, 9, 6);
        if (c == 0) c = 1;
        terms.push_back({hc::Rational(half(rng), 2), hc::Coefficient(c)});
    }
    return hc::Series(std::move(terms), std::nullopt);
}

inline hc::Series random_nonzero(std::mt19937_64& rng, int min_half = -4) {
    for (;;) {
        hc::Series s = random_series(rng, min_half);
        if (!s.is_exact_zero()) return s;
    }
}
