#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace citeidx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raw input violates a precondition (negative count, unsorted vector).
class InputError : public Error {
public:
    using Error::Error;
};

/// A rank argument lies outside 0..n (or 1..n).
class RangeError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an index function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The profile has h = 0 or g = 0 and the requested quantity needs h, g >= 1.
class DegenerateProfileError : public Error {
public:
    using Error::Error;
};

class LookupError : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

/// Malformed CSV/JSON input. `line()` is 1-based, 0 when not applicable.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace citeidx
