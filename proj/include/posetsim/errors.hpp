#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace posetsim {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A constructor argument violates a data-model invariant
// (duplicate element, empty class, malformed id, rank gap).
class InvariantViolation : public Error {
public:
    using Error::Error;
};

// The requested relation is not defined for the given answer-set shape.
class UnsupportedRelation : public Error {
public:
    using Error::Error;
};

// Two adjacency matrices do not share the same element order.
class OrderMismatch : public Error {
public:
    using Error::Error;
};

// Strict universe policy and the two inputs cover different elements.
class UniverseMismatch : public Error {
public:
    using Error::Error;
};

// An element lies outside the stated universe.
class UnknownElement : public Error {
public:
    using Error::Error;
};

// A measure has no value on these inputs (zero denominator and no convention).
class UndefinedMeasure : public Error {
public:
    using Error::Error;
};

// Two chains share no element, so no rank comparison is possible.
class NoCommonElements : public Error {
public:
    using Error::Error;
};

// Fewer elements than the measure needs (pair-based measures need n >= 2).
class TooFewElements : public Error {
public:
    using Error::Error;
};

// The two inputs have incompatible shapes and coercion was not requested.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

// A run or qrels file is syntactically malformed; carries the 1-based line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace posetsim
