#pragma once

#include <stdexcept>
#include <string>

namespace srbm {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input model violates one of the admissibility conditions.  The message
// names the violated condition.
struct InvalidModel : Error {
    using Error::Error;
};

// Parameters sit within margin of an equality boundary where the
// construction changes discontinuously.
struct Degenerate : Error {
    using Error::Error;
};

// Argument lies on (or within 1e-12 of) a branch cut.
struct OnCut : Error {
    using Error::Error;
};

struct PoleOfG : Error {
    using Error::Error;
};
struct PoleOfE : Error {
    using Error::Error;
};
struct AtPole : Error {
    using Error::Error;
};
struct AtKernelZero : Error {
    using Error::Error;
};

struct NoConvergence : Error {
    using Error::Error;
};
struct NoDecoupling : Error {
    using Error::Error;
};
struct NotCovered : Error {
    using Error::Error;
};

// A float input sits within tolerance of an integer-lattice point, but
// exactness was not declared; the classification cannot be trusted.
struct AmbiguousNumerical : Error {
    using Error::Error;
};

// Internal consistency failures (counted degrees disagree with the
// constructed root lists, cross-checked formulas disagree, ...).
struct DegreeMismatch : Error {
    using Error::Error;
};
struct InternalConsistency : Error {
    using Error::Error;
};

struct QuadratureFailure : Error {
    using Error::Error;
};
struct RadiusTooSmall : Error {
    using Error::Error;
};
struct PushbackDivergence : Error {
    using Error::Error;
};

}  // namespace srbm
