#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace faf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An approximate value could not decide a floor, sign or ordering.
/// Escalating precision (or supplying exact input) is up to the caller.
class Indeterminate : public Error {
public:
    explicit Indeterminate(const std::string& what, std::optional<std::size_t> step = std::nullopt)
        : Error(step ? what + " (at step " + std::to_string(*step) + ")" : what), step_(step) {}

    std::optional<std::size_t> step() const { return step_; }

private:
    std::optional<std::size_t> step_;
};

class ParseError : public Error {
public:
    using Error::Error;
};

/// Violated operation precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

class IncompatibleFields : public Error {
public:
    using Error::Error;
};

/// The isolating interval of a real embedding is malformed or cannot be refined.
class RootIsolationError : public Error {
public:
    using Error::Error;
};

class Pole : public Error {
public:
    using Error::Error;
};

class InsufficientDepth : public Error {
public:
    using Error::Error;
};

class NonpositivePeriod : public Error {
public:
    using Error::Error;
};

/// Refusal to build a toric diagram without a convergence certificate.
class NotToric : public Error {
public:
    using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class ConsistencyFault : public Error {
public:
    using Error::Error;
};

}  // namespace faf
