#pragma once

#include <stdexcept>

namespace svdkit {

// Base class for all svdkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A value-level precondition failed (non-finite data, zero vector, bad option).
struct InvalidInput : Error {
    using Error::Error;
};

// Dimensions do not match what the operation requires.
struct ShapeError : Error {
    using Error::Error;
};

// A matrix that must be positive semidefinite is not.
struct NotPositiveSemidefinite : InvalidInput {
    using InvalidInput::InvalidInput;
};

// A state vector that must have unit norm does not.
struct NotNormalized : InvalidInput {
    using InvalidInput::InvalidInput;
};

// An iterative solver exceeded its sweep budget.
struct ConvergenceFailure : Error {
    using Error::Error;
};

// A contraction spec string does not match the grammar.
struct ParseError : Error {
    using Error::Error;
};

// A tensor file does not parse as the documented format.
struct FormatError : Error {
    using Error::Error;
};

// Reading or writing a file failed at the OS level.
struct IoError : Error {
    using Error::Error;
};

} // namespace svdkit
