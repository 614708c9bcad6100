#pragma once

#include <stdexcept>
#include <string>

namespace picmod {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A matrix entry breaks m_j * M_ij = 0 (mod n_i), or a table fails a
// structural identity that the constructor promises.
struct WellDefinednessError : Error {
    using Error::Error;
};

// Quadratic-form generator data violates a torsion invariant.
struct InvalidFormError : Error {
    using Error::Error;
};

// An enumeration would exceed the configured candidate or order budget.
struct SizeGuardError : Error {
    using Error::Error;
};

// Dimension mismatch between composed or compared objects.
struct ShapeError : Error {
    using Error::Error;
};

// A checked identity that theory guarantees failed at runtime; always a bug
// in this library or a genuine counterexample worth reporting.
struct PropertyViolationError : Error {
    using Error::Error;
};

// standard_cocycle could not produce a valid pair for either sign choice.
struct ConstructionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace picmod
