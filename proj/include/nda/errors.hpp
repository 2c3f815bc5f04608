// Error taxonomy: each failure mode is a distinct type so callers (and the
// CLI exit-code mapping) can tell them apart.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nda {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A value lies outside the bijection's domain (including the guard band at
// finite interval walls).
class DomainError : public Error {
public:
    using Error::Error;
};

// Division by the additive neutral 0' (f(Y) = 0).
class DivisionByZeroPrime : public Error {
public:
    using Error::Error;
};

// A lower-image intermediate is infinite, or the preimage lands on/outside
// the domain boundary. Horizons are hard edges, never clamped.
class OverflowToBoundary : public Error {
public:
    using Error::Error;
};

// Operands carry different bijection contexts; mixing arithmetics silently
// is exactly the bug this library exists to surface.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

class NonFiniteDerivative : public Error {
public:
    using Error::Error;
};

class QuadratureFailure : public Error {
public:
    using Error::Error;
};

// f' vanishes or is non-finite at the base point of an effective metric.
class SingularMetric : public Error {
public:
    using Error::Error;
};

// The source event sits on top of the observer (f(Y^1) = 0).
class SourceAtObserver : public Error {
public:
    using Error::Error;
};

// (f(T)/f(T0) or t/t0) < 0 where a real 2/3 power is required.
class NegativeRatio : public Error {
public:
    using Error::Error;
};

// Invalid construction parameters, bijection specs, or CLI configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

// Expression syntax error; keeps the 1-based column for diagnostics.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t column)
        : Error(what + " (column " + std::to_string(column) + ")"), column_(column) {}
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t column_;
};

}  // namespace nda
