#pragma once

#include <stdexcept>
#include <string>

namespace splitplan {

/// Malformed input document (bad JSON, missing required keys).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structurally valid input that violates a domain invariant.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Layer input shape incompatible with the layer, or a computed dimension <= 0.
struct ShapeMismatch : ValidationError {
    using ValidationError::ValidationError;
};

/// Problem instance with non-positive denominators or broken profile invariants.
struct InvalidInstance : ValidationError {
    using ValidationError::ValidationError;
};

/// Split index outside the range a memory/size query is defined on.
struct IndexOutOfRange : ValidationError {
    using ValidationError::ValidationError;
};

/// Decision matrix with negative or non-finite entries.
struct InvalidMatrix : ValidationError {
    using ValidationError::ValidationError;
};

/// Every candidate violates at least one constraint.
struct NoFeasibleSolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace splitplan
