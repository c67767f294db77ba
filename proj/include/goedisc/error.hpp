#pragma once

#include <stdexcept>
#include <string>

namespace goedisc {

/// Base for every precondition failure raised by the library. The CLI maps
/// this family to exit status 2.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DomainError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NumericInputError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class CorrelationError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnsupportedDimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Exhaustive search refused because n exceeds the configured cap.
class SearchCapError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Adaptive quadrature could not reach the requested accuracy; carries the
/// best estimate it did reach.
class AccuracyNotMetError : public std::runtime_error {
public:
    AccuracyNotMetError(const std::string& what, double estimate, double error_estimate)
        : std::runtime_error(what), estimate_(estimate), error_(error_estimate) {}
    double estimate() const noexcept { return estimate_; }
    double error_estimate() const noexcept { return error_; }

private:
    double estimate_;
    double error_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace goedisc
