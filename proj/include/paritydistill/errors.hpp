#pragma once

#include <stdexcept>
#include <string>

namespace paritydistill {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A NOON label (U/D) was requested for fermions.
struct InvalidForStatistics : Error {
    using Error::Error;
};

/// Two fermions were placed in the same single-particle mode.
struct PauliViolation : Error {
    using Error::Error;
};

/// Operands live on different sector bases.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// An element spec is missing a parameter required by its kind.
struct MissingParameter : Error {
    using Error::Error;
};

/// A matrix failed the unitarity check.
struct NotUnitary : Error {
    using Error::Error;
};

/// A negative interaction time was supplied.
struct NegativeTime : Error {
    using Error::Error;
};

/// A probability left [0, 1] by more than the tolerance.
struct InvalidProbability : Error {
    using Error::Error;
};

/// A channel input has support outside the one-particle-per-mode subspace.
struct SupportOutsideLR : Error {
    using Error::Error;
};

/// A labeled two-particle state is not in the requested symmetry sector.
struct WrongSymmetrySector : Error {
    using Error::Error;
};

}  // namespace paritydistill
