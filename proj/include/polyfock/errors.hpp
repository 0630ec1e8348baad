#pragma once

#include <stdexcept>

namespace polyfock {

// Raised when an operation would place a coefficient past the degree cap.
struct DegreeOverflowError : std::length_error {
    using std::length_error::length_error;
};

// Point outside the domain of a kernel, space, or operator parameter.
struct DomainViolationError : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation at (or numerically at) a pole of a rational expression.
struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A truncated series failed its tail bound.
struct TailNotConvergedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace polyfock
