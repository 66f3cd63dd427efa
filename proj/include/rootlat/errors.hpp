#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rootlat {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct NotCoprime : Error {
    using Error::Error;
};

struct NotReal : Error {
    using Error::Error;
};

struct NotAlgebraicInteger : Error {
    using Error::Error;
};

struct InvalidGenerator : Error {
    using Error::Error;
};

struct NotInQK : Error {
    using Error::Error;
};

struct IntegralityViolation : Error {
    using Error::Error;
};

struct NotSubfield : Error {
    using Error::Error;
};

struct InadmissibleType : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

struct NonGenericFunctional : Error {
    using Error::Error;
};

// Signals that an internal consistency check failed; never expected on valid input.
struct VerificationFailure : Error {
    using Error::Error;
};

struct InvalidRootPair : Error {
    using Error::Error;
};

struct UnrecognizedDiagram : Error {
    using Error::Error;
};

struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

}  // namespace rootlat
