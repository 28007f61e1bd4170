#pragma once

#include <stdexcept>
#include <string>

namespace fglh {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live over different generator tables, leg arities or shapes.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A substitution argument has a nonzero weight-0 constant term.
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// A homomorphism extension was asked to evaluate a generator without an image.
class MissingImageError : public Error {
public:
    MissingImageError(const std::string& generator)
        : Error("missing image for generator '" + generator + "'"), generator_(generator)
    {
    }
    const std::string& generator() const noexcept { return generator_; }

private:
    std::string generator_;
};

/// Workspace text could not be parsed; carries a 1-based line and column.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

} // namespace fglh
