#ifndef ECTRACE_ERROR_HPP
#define ECTRACE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ectrace {

// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A caller broke an API contract (mismatched fields, bad argument shape).
class UsageError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    DivisionByZeroError() : Error("division by zero") {}
    using Error::Error;
};

// Syntax error in the element grammar; position is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what_failed)
        : Error(what_failed + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class SingularCurveError : public Error {
public:
    using Error::Error;
};

class PointNotOnCurveError : public Error {
public:
    using Error::Error;
};

// An operation that requires an irreducible modulus detected a factor.
class ReducibleModulusError : public Error {
public:
    using Error::Error;
};

// An element expected to lie in the subfield generated by theta^(p^d) does not.
class NotInSubfieldError : public Error {
public:
    using Error::Error;
};

// The trace algorithms reached a state that is impossible for valid inputs
// (point off the curve, reducible or unexpectedly inseparable modulus).
class InconsistentInputError : public Error {
public:
    using Error::Error;
};

// Rejection sampling exceeded its attempt budget.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

}  // namespace ectrace

#endif
