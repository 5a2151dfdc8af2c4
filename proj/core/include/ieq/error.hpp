#pragma once

#include <stdexcept>
#include <string>

namespace ieq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad modulus, empty set, degenerate coefficient, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A lemma's hypotheses were checked and found not to hold for the supplied data.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Floating-point convolution failed its rounding validation.
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// A guaranteed postcondition was observed to fail. Always a bug or a numerical breakdown.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace ieq
