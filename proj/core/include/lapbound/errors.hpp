#pragma once

#include <stdexcept>
#include <string>

namespace lb {

/// Base class for all lapbound errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by the caller.
struct contract_error : error {
    using error::error;
};

/// Input data (file, descriptor, facet list) is structurally invalid.
struct malformed_input_error : error {
    using error::error;
};

/// A bound id was requested on an instance/r/k outside its applicability
/// predicate. Distinct from an inequality failing to hold.
struct inapplicable_bound_error : error {
    using error::error;
};

/// A family assumption (forest, girth, ...) failed its brute-force check.
struct family_assumption_error : error {
    using error::error;
};

/// An internal self-check failed (e.g. product vs. combinatorial formula).
struct internal_consistency_error : error {
    using error::error;
};

/// The instance is degenerate for the requested construction (e.g. all top
/// degrees zero when building L').
struct degenerate_instance_error : error {
    using error::error;
};

}  // namespace lb
