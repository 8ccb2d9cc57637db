#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace latmine {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. `line` and `column` are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A label that does not exist in the context it is resolved against.
class NameError : public Error {
public:
    using Error::Error;
};

/// Parameter outside its admissible range (thresholds, densities, filters).
class ConstraintError : public Error {
public:
    using Error::Error;
};

/// Input too large for an exponential algorithm without an explicit override.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace latmine
