#pragma once

#include "mwrc/config.hpp"
#include "mwrc/sweep.hpp"

#include <string>

namespace mwrc {

/// Loads a JSON network description:
///   { "clusters": [[3,2],[2,2]], "relay_antennas": 3 }
/// Throws ValidationError naming the offending field.
NetworkConfig load_config(const std::string& path);

/// Loads a JSON sweep description:
///   { "ranges": { "L": 2, "K": 2, "M1": [1,24], "M2": [1,24], "N": 16 },
///     "seeds": [0] }
/// Each range is a single integer or a [lo, hi] pair; "M" may replace
/// "M1"/"M2" to tie them together. "seeds" is optional.
SweepSpec load_sweep_spec(const std::string& path);

}  // namespace mwrc
