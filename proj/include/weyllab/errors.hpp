#pragma once

#include <stdexcept>
#include <string>

namespace weyllab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unsupported (type, rank) pair or malformed group description.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Argument outside the domain of an operation (bad letter, not a root, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A mathematical invariant failed to hold. Always a bug worth reporting.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace weyllab
