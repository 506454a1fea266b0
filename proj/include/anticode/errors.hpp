#pragma once

#include <stdexcept>
#include <string>

namespace anticode {

// Base of every error the library reports. The CLI maps the concrete
// subclasses onto its exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad field parameters, rank-deficient
// generators, schema violations, dimension mismatches.
struct InputError : Error {
    using Error::Error;
};

// Operands from two different fields were combined.
struct FieldMismatch : InputError {
    using InputError::InputError;
};

// Division by zero and similar undefined field operations.
struct ArithmeticError : Error {
    using Error::Error;
};

// Exhaustive enumeration would exceed the configured budget and no
// structural shortcut applies.
struct InfeasibleEnumeration : Error {
    using Error::Error;
};

// A required hypothesis (e.g. no zero generator column) does not hold.
struct HypothesisViolation : Error {
    using Error::Error;
};

// A bound formula is undefined for the given parameters.
struct BoundUndefined : Error {
    using Error::Error;
};

}  // namespace anticode
