#pragma once

#include <stdexcept>

namespace varpi {

// Base class for every failure raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The generating set spans only a line through the origin (zero-area hull).
struct DegenerateBody : Error {
    using Error::Error;
};

// A direction argument was the zero vector.
struct ZeroDirection : Error {
    using Error::Error;
};

// A 2x2 map required to be invertible has |det| below 1e-12.
struct SingularMap : Error {
    using Error::Error;
};

// An argument is outside its stated domain.
struct DomainError : Error {
    using Error::Error;
};

// An iterative refinement exceeded its cap before reaching tolerance.
struct NoConvergence : Error {
    using Error::Error;
};

// Arc with theta_end <= theta_start.
struct EmptyArc : Error {
    using Error::Error;
};

// A bracketing sign change was lost to tolerance.
struct NoRoot : Error {
    using Error::Error;
};

// A documented precondition does not hold for the given arguments.
struct PreconditionError : Error {
    using Error::Error;
};

}  // namespace varpi
