#pragma once

#include <stdexcept>
#include <string>

namespace gfb {

/// Caller supplied something outside an operation's precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal invariant (unimodularity, nesting, ...) did not hold.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Requested depth / size exceeds what the implementation will enumerate.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameter outside the mathematical domain (e.g. zeta(s) with s <= 1).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace gfb
