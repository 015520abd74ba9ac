#pragma once

#include <stdexcept>
#include <string>

namespace diforest {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// An argument violates an operation's contract (unknown identifier, face
/// not in the complex, bad family parameters, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A configured size cap was exceeded. Deliberately distinct from a negative
/// answer: callers must report "capped", never silently "false".
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// Digraph text file could not be parsed.
class ParseError : public Error {
public:
    ParseError(int line_no, const std::string& what_arg)
        : Error("line " + std::to_string(line_no) + ": " + what_arg), line(line_no) {}
    int line;
};

} // namespace diforest
