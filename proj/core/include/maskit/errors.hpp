#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maskit {

// Exit-code classes used by the CLI: usage 1, precondition 2, numerical 3.
enum class ErrorKind { usage, precondition, numerical, io };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(ErrorKind::usage, what + " at byte " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

// Word is not a simple closed curve, or its arcs/traces break the coordinate conventions.
struct NotSimpleError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NotFoundError : PreconditionError {
    using PreconditionError::PreconditionError;
};

struct NumericalError : Error {
    explicit NumericalError(const std::string& what) : Error(ErrorKind::numerical, what) {}
};

struct SingularJacobianError : NumericalError {
    using NumericalError::NumericalError;
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

}  // namespace maskit
