#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gbx {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class DivisionError : public Error {
public:
    using Error::Error;
};

class UndefinedDegree : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

/// Raised when an order is asked about a variable it has no rank or weight for,
/// or when an order specification is not a bijection / not injective.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A configured resource cap was hit; the computation was abandoned.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::string resource, std::string detail);

    const std::string& resource() const noexcept { return resource_; }

private:
    std::string resource_;
};

class NotBinomial : public Error {
public:
    using Error::Error;
};

class InvalidTarget : public Error {
public:
    using Error::Error;
};

} // namespace gbx
