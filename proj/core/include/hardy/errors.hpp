#pragma once

#include <stdexcept>

namespace hardy {

// Base class for every failure raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid input or violated precondition.
struct DomainError : Error {
    using Error::Error;
};

// An iterative process exhausted its budget before reaching tolerance.
struct ConvergenceError : Error {
    using Error::Error;
};

struct NoSignChange : DomainError { using DomainError::DomainError; };
struct DimensionMismatch : DomainError { using DomainError::DomainError; };
struct ZeroVector : DomainError { using DomainError::DomainError; };
struct NonPositiveEntry : DomainError { using DomainError::DomainError; };
struct NonPositiveWeight : DomainError { using DomainError::DomainError; };
struct InvalidInterval : DomainError { using DomainError::DomainError; };
struct InvalidLength : DomainError { using DomainError::DomainError; };
struct InvalidDegree : DomainError { using DomainError::DomainError; };
struct OutOfDomain : DomainError { using DomainError::DomainError; };
struct OutOfRange : DomainError { using DomainError::DomainError; };
struct TooSmall : DomainError { using DomainError::DomainError; };
struct PoleError : DomainError { using DomainError::DomainError; };

struct NoConvergence : ConvergenceError { using ConvergenceError::ConvergenceError; };
struct ToleranceNotMet : ConvergenceError { using ConvergenceError::ConvergenceError; };

} // namespace hardy
