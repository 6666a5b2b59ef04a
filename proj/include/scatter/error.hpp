#pragma once

#include <stdexcept>
#include <string>

namespace scatter {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Caller violated a documented contract (non-unit direction, too few nodes, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// Input lies outside the formula's domain of validity.
struct DomainError : Error {
    using Error::Error;
};

// Kinematically singular configuration: vanishing jacobian, coincident
// coordinates, zero relative motion.  Carries the offending coordinates in
// the message when known.
struct SingularityError : Error {
    using Error::Error;
};

// A numerical routine failed to reach its accuracy target.
struct AccuracyError : Error {
    using Error::Error;
};

// The requested object does not exist for these parameters.
struct NotFoundError : Error {
    using Error::Error;
};

}  // namespace scatter
