#pragma once

#include <stdexcept>
#include <string>

namespace inclist {

// Malformed graph data: loops, duplicate edge ids, endpoints out of range.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Text input that cannot be parsed.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// An operation was called on an input outside its stated hypotheses.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A constructive step that cannot fail on valid input has failed.
// Always a bug (or a violated internal invariant), never bad user input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace inclist
