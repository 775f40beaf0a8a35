#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bes {

enum class ErrorKind {
    input,         // malformed or out-of-range data supplied by the caller
    precondition,  // well-formed data that violates an operation's hypothesis
    construction,  // a constructor cannot build the requested object
    internal,      // an invariant that should be unreachable was violated
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class InputError : public Error {
public:
    explicit InputError(const std::string& message) : Error(ErrorKind::input, message) {}
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& message)
        : Error(ErrorKind::precondition, message) {}
};

class ConstructionError : public Error {
public:
    explicit ConstructionError(const std::string& message)
        : Error(ErrorKind::construction, message) {}
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& message) : Error(ErrorKind::internal, message) {}
};

enum class ParseErrorCode {
    malformed_header,
    bad_triple,
    unsorted_triple,
    unsorted_edges,
    duplicate_edge,
    out_of_range,
    edge_count_mismatch,
    bad_witness,
    trailing_content,
};

const char* to_string(ParseErrorCode code) noexcept;

/// Parse failure with a 1-based line number.
class ParseError : public InputError {
public:
    ParseError(ParseErrorCode code, std::size_t line, const std::string& detail);

    ParseErrorCode code() const noexcept { return code_; }
    std::size_t line() const noexcept { return line_; }

private:
    ParseErrorCode code_;
    std::size_t line_;
};

}  // namespace bes
