#pragma once

#include <stdexcept>
#include <string>

namespace nilpair {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text: scalar syntax, field designators, input files.
struct ParseError : Error {
    using Error::Error;
};

// Mixing scalars/matrices that live over different fields.
struct FieldMismatchError : Error {
    using Error::Error;
};

// Dimension mismatches and out-of-range indices.
struct ShapeError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

struct NotNilpotentError : Error {
    using Error::Error;
};

// A matrix that was required to commute with J_m ⊕ J_n does not.
struct NotInCommutantError : Error {
    using Error::Error;
};

// A documented operation precondition does not hold (e.g. equal Jordan
// block sizes, decomposable input where indecomposable is required,
// no eliminating move available).
struct PreconditionError : Error {
    using Error::Error;
};

// A mandatory internal self-check failed; results must not be trusted.
struct VerificationError : Error {
    using Error::Error;
};

// An enumeration would exceed the configured budget.
struct BudgetError : Error {
    using Error::Error;
};

} // namespace nilpair
