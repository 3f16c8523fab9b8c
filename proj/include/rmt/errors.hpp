#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rmt {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caller broke a documented precondition.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// ODE integration could not proceed; carries the time at which it stopped.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double time)
        : std::runtime_error(what + " (t = " + std::to_string(time) + ")"), time_(time) {}
    double time() const noexcept { return time_; }

private:
    double time_;
};

/// Adaptive quadrature did not reach the requested tolerance.
class AccuracyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tracy-Widom curves vanish before the end of the grid.
class TailTruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data is empty or violates an ordering/integrity requirement.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyHistogramError : public DataError {
public:
    using DataError::DataError;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace rmt
