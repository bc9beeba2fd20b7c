#pragma once

#include <stdexcept>
#include <string>

namespace nmeasure {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value, argument or configuration violates a documented precondition.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A residual or loss evaluated to NaN/Inf.
class NonFiniteValue : public Error {
public:
    using Error::Error;
};

/// Iterative solver (Newton, line search) failed to converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// File could not be read, written or parsed.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace nmeasure
