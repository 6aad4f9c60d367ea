#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ktr {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based; 0 when no line applies.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

/// The requested solver does not accept this kind of instance.
class UnsupportedInput : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed its size guard.
class TooLarge : public Error {
public:
    using Error::Error;
};

class GenerationError : public Error {
public:
    using Error::Error;
};

/// A constructed object failed its own post-verification.
class ConstructionError : public Error {
public:
    using Error::Error;
};

}  // namespace ktr
