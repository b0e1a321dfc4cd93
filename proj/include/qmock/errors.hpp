#pragma once

#include <stdexcept>

namespace qmock {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// int64 exponent arithmetic would wrap
struct OverflowError : Error {
    using Error::Error;
};

// operands live on different exponent lattices, or an exponent is off-lattice
struct LatticeMismatch : Error {
    using Error::Error;
};

// an operand does not carry enough correct coefficients for the request
struct PrecisionError : Error {
    using Error::Error;
};

// inversion of a series with no known nonzero term, or a vanishing theta
struct DivisionByZero : Error {
    using Error::Error;
};

// Appell-Lerch arguments that hit a pole of the sum or a zero denominator
struct NonGenericArgument : Error {
    using Error::Error;
};

// a summation whose terms never leave the requested window
struct DivergentSum : Error {
    using Error::Error;
};

struct UnknownName : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

} // namespace qmock
