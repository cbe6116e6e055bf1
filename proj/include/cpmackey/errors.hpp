#pragma once

#include <stdexcept>
#include <string>

namespace mackey {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller violated a documented precondition (dimension mismatch, wrong prime, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// Construction-time validation failed (ill-defined map, broken axiom, bad input data).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

}  // namespace mackey
