#pragma once

#include "hypercalc/rational.hpp"

namespace hypercalc {

enum class Backend { Exact, Decimal };

/// Precision policy shared by one computation.
///
/// `order` is the exponent used to truncate expansions whose inputs are exact
/// (reciprocals of multi-term series, Taylor and binomial series). Values that
/// already carry a finite order bound are expanded to that bound instead.
struct Context {
    Rational order{16};
    Backend backend = Backend::Exact;
    unsigned digits = 50;

    /// Throws InvalidArgument unless order >= 2 and digits >= 16.
    void validate() const;

    Context with_backend(Backend b) const {
        Context c = *this;
        c.backend = b;
        return c;
    }
};

}  // namespace hypercalc
