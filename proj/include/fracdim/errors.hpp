#pragma once

#include <stdexcept>
#include <string>

namespace fracdim {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed geometric input: clockwise polygons, repeated vertices, bad mesh specs.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation (e.g. stage k = 0).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Exact arithmetic requested where only approximate values are available, or modes mixed.
class ModeError : public Error {
public:
    using Error::Error;
};

/// Operation on an empty set that requires a nonempty one.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// Request exceeds a configured resource cap (depth, primitive count, cell range).
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Not enough data points for a fit.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure while reading or writing a named path.
class IoError : public Error {
public:
    using Error::Error;
};

/// Text input rejected by a strict parser; carries the source name and line number.
class ParseError : public Error {
public:
    ParseError(const std::string& source, int line, const std::string& message)
        : Error(source + ":" + std::to_string(line) + ": " + message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Iteration did not reach the requested threshold; carries the last iterate.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& message, unsigned last_k, double last_value)
        : Error(message), last_k_(last_k), last_value_(last_value) {}

    unsigned last_k() const { return last_k_; }
    double last_value() const { return last_value_; }

private:
    unsigned last_k_;
    double last_value_;
};

}  // namespace fracdim
