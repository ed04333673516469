#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hilbspec {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial or file text. `position` is a 0-based byte offset
/// into the parsed string (or a line number for file-level errors).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

    /// File-level error: the message is kept verbatim, prefixed with the line.
    static ParseError at_line(const std::string& what, std::size_t line) {
        return ParseError(Verbatim{}, "line " + std::to_string(line) + ": " + what, line);
    }
    /// Same error with `prefix` (e.g. a file name) in front of the message.
    ParseError prefixed(const std::string& prefix) const { return ParseError(Verbatim{}, prefix + what(), position_); }

private:
    struct Verbatim {};
    ParseError(Verbatim, const std::string& message, std::size_t position) : Error(message), position_(position) {}

    std::size_t position_;
};

class UnknownVariable : public Error {
public:
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class ContextMismatch : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Raised when a Groebner computation (or any other bounded search) runs out of
/// its configured budget. Never replaced by a partial answer.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// The parametrized ideal meets K[T]: `witness` is a nonzero element of
/// that intersection.
class HypothesisViolation : public Error {
public:
    explicit HypothesisViolation(const std::string& witness)
        : Error("ideal meets the parameter ring; witness " + witness), witness_(witness) {}
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

}  // namespace hilbspec
