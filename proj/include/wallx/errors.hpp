#pragma once

#include <stdexcept>
#include <string>

namespace wallx {

// Base of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value that must lie in Q carries a nonzero irrational Cyc8 component.
struct NotRational : Error {
    using Error::Error;
};

// Division by a series that vanishes through its whole valid range.
struct ZeroLeading : Error {
    using Error::Error;
};

// exp() of a series with a term at a nonpositive exponent.
struct NonPositiveValuation : Error {
    using Error::Error;
};

// A coefficient was requested beyond the range in which a series is exact.
struct BeyondTruncation : Error {
    using Error::Error;
};

// exp() of a multivariate series with a pure-q constant part.
struct ConstantPartPresent : Error {
    using Error::Error;
};

// The sign constraints of a wall search do not bound the coordinate box.
struct UnboundedSearch : Error {
    using Error::Error;
};

// A sign exponent that should be an integer is not.
struct NonIntegral : Error {
    using Error::Error;
};

} // namespace wallx
