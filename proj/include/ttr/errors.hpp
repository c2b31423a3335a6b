#pragma once

#include <stdexcept>
#include <string>

namespace ttr {

// Parameter outside an operation's documented window.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation precondition violated (e.g. st already present for an st-swap).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested work exceeds a configured capacity cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A backend cannot handle this instance (path explosion, guard tripped).
struct BackendInfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parametric construction has no valid realization.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands that must describe the same class do not.
struct DimensionMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input file or stream violates the interchange format. Message carries a line number.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A guaranteed internal property failed; indicates a bug, not bad input.
struct InternalInvariantError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace ttr
