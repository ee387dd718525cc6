#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isolab {

/// Malformed graph or vertex set (out-of-range endpoint, self-loop, null input).
struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A numeric parameter outside the domain of an operation.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A search, enumeration or rejection budget was exhausted.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The request is well-formed but the quantity is not defined or not computable here.
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text input that does not follow the expected grammar. `line` is 0 when the
/// input is not line oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string & message, std::size_t line = 0)
        : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace isolab
