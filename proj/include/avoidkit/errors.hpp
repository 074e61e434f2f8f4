#pragma once

#include <stdexcept>
#include <string>

namespace avoidkit {

// Base class for all avoidkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input has the wrong width/length for the operation.
struct InputShapeError : Error {
    using Error::Error;
};

// Malformed textual input (circuit files, tt lines, witnesses given as text).
struct ParseError : Error {
    using Error::Error;
};

// A requested computation exceeds a configured resource cap.
struct CapacityError : Error {
    using Error::Error;
};

// A backend ran out of budget (distinct from a negative answer).
struct ResourceError : Error {
    using Error::Error;
};

// A caller violated a documented precondition that is only detectable mid-run.
struct ContractViolation : Error {
    using Error::Error;
};

// Bad parameter combination (non-prime modulus, eps <= 0, ...).
struct ParameterError : Error {
    using Error::Error;
};

// A serialized object does not decode (stop fields out of range, ...).
struct DecodeError : Error {
    using Error::Error;
};

// An upstream data source failed (hard-table source, ...).
struct DependencyError : Error {
    using Error::Error;
};

// A result failed its post-hoc verification.
struct VerificationError : Error {
    using Error::Error;
};

// An internal invariant broke; always a bug.
struct InternalError : Error {
    using Error::Error;
};

} // namespace avoidkit
