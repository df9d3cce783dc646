#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qlattice {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAPrimePower : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class AmbientMismatch : public Error {
public:
    using Error::Error;
};

/// Thrown when an enumeration or construction would exceed a configured cap.
/// Carries the exact count that was refused, as a decimal string (it may not
/// fit a machine word).
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, std::string refused)
        : Error(what), refused_count(std::move(refused)) {}
    std::string refused_count;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class MissingParameter : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_number(line) {}
    std::size_t line_number;
};

class NotUniform : public Error {
public:
    using Error::Error;
};

class ParameterMismatch : public Error {
public:
    using Error::Error;
};

class CenterTooBig : public Error {
public:
    using Error::Error;
};

class NotOptimal : public Error {
public:
    using Error::Error;
};

class HypothesisUnverified : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

} // namespace qlattice
