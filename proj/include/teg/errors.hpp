#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace teg {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input data (files, event lists, labelled graphs).
class InputError : public Error {
public:
    using Error::Error;
};

/// A line of an event list could not be parsed.
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A statistic was requested over an empty scope (no edges, no samples).
class EmptyScopeError : public Error {
public:
    using Error::Error;
};

}  // namespace teg
