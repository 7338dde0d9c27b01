#pragma once

#include <optional>
#include <string_view>

#include "hypercalc/value.hpp"

namespace hypercalc {

enum class Fn { Exp, Ln, Sin, Cos, Sqrt, Abs };

std::optional<Fn> function_named(std::string_view name);
std::string_view to_string(Fn fn);

/// Elementary function extended to the model. Finite arguments expand in a
/// Taylor series about their standard part; infinite arguments produce
/// growth, log-power, or oscillating components.
Value apply(Fn fn, const Value& x, const Context& ctx);

/// x^y = exp(y ln x) for x > 0; 0^y is 0, 1 or DivisionByZero by the sign of y.
/// An exact rational constant exponent is handed to pow_rational.
Value pow_general(const Value& x, const Value& y, const Context& ctx);

/// Arithmetic where at least one operand leaves the rho-power scale.
Value escape_arith(ArithOp op, const Value& a, const Value& b, const Context& ctx);

}  // namespace hypercalc
