#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcc {

/// Family or constructor parameters outside their domain.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph or coloring text. Carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// An operation was called on an input violating its precondition
/// (disconnected graph, non-tree, not 2-connected, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Inputs that are well-formed but inconsistent with each other, such as a
/// vertex sequence that is not a path of the graph.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction reached a state its underlying argument says is impossible.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pcc
