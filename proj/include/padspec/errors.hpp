#pragma once

#include <stdexcept>
#include <string>

namespace padspec {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* kind() const noexcept { return "error"; }
};

/// Invalid or mismatched input (wrong prime, dimension mismatch, bad JSON, ...).
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error(msg) {}
    const char* kind() const noexcept override { return "input"; }
};

class DivisionByZeroError : public InputError {
public:
    explicit DivisionByZeroError(const std::string& msg) : InputError(msg) {}
    const char* kind() const noexcept override { return "division-by-zero"; }
};

class NoSquareRootError : public InputError {
public:
    explicit NoSquareRootError(const std::string& msg) : InputError(msg) {}
    const char* kind() const noexcept override { return "no-square-root"; }
};

/// A structural axiom failed while validating an object (e.g. a measure whose
/// atom images are not mutually orthogonal projections). The message names the
/// violated axiom and the witness atoms/entries.
class ValidationError : public InputError {
public:
    explicit ValidationError(const std::string& msg) : InputError(msg) {}
    const char* kind() const noexcept override { return "validation"; }
};

}  // namespace padspec
