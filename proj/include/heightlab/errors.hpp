#pragma once

#include <stdexcept>
#include <string>

namespace heightlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A projective point with no nonzero coordinate, or a point off its model.
struct InvalidPoint : Error {
    using Error::Error;
};

// Divisors or points from different models mixed in one operation.
struct ModelMismatch : Error {
    using Error::Error;
};

// Height representative evaluated at its singular locus.
struct UndefinedAtPoint : Error {
    using Error::Error;
};

struct NotPseudoEffective : Error {
    using Error::Error;
};

struct RequiresAmple : Error {
    using Error::Error;
};

// Canonical-height iteration exceeded its doubling budget.
struct ConvergenceFailure : Error {
    using Error::Error;
};

// Torsion test saw a sub-tolerance height but no small order; the
// tolerance is too loose or an input assumption is violated.
struct Inconclusive : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace heightlab
