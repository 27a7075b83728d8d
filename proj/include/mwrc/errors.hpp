#pragma once

#include <stdexcept>
#include <string>

namespace mwrc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed network configuration (empty cluster, zero antennas, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Requested subspace dimension exceeds what the antenna counts admit.
struct DimensionError : Error {
    using Error::Error;
};

/// Input matrices numerically rank-deficient, or the RNG failed to produce
/// full-rank channels within the retry budget.
struct DegenerateChannelError : Error {
    using Error::Error;
};

/// A strategy descriptor violates its feasibility invariants.
struct PlanError : Error {
    using Error::Error;
};

/// A stacked matrix came out too ill-conditioned to trust; resample the
/// channel realization.
struct ConditioningError : Error {
    using Error::Error;
};

}  // namespace mwrc
