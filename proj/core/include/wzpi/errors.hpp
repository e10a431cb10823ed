#pragma once

#include <stdexcept>
#include <string>

namespace wzpi {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Exact division by a zero rational / zero polynomial.
struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& what = "division by zero") : Error(what) {}
};

/// Evaluation of a rational function (or term) at a zero of its denominator.
struct PoleError : Error {
    explicit PoleError(const std::string& what = "evaluation at a pole") : Error(what) {}
};

/// A precondition of an operation was violated by the caller.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Malformed text input (rational, polynomial, or pair file).
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// An interval was too wide to certify the requested output
/// (e.g. a divisor whose error interval contains zero).
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& what) : Error(what) {}
};

} // namespace wzpi
