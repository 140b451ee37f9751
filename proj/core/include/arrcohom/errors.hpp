#pragma once

#include <stdexcept>
#include <string>

namespace arrcohom {

/// A documented precondition of an operation does not hold for the input.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal consistency check failed (e.g. a boundary operator with d∘d != 0).
class IntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Input data could not be parsed or is internally inconsistent.
class MalformedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two independent computation paths disagreed.
class OracleMismatch : public IntegrityError {
public:
    using IntegrityError::IntegrityError;
};

}  // namespace arrcohom
