#pragma once

#include "mwrc/config.hpp"

#include <vector>

namespace mwrc {

/// The three-term DoF upper bound min{sum of all user antennas,
/// 2 * (sum of all non-strongest users), 2N} evaluated in exact integers.
struct UpperBoundBreakdown {
    long long term_sum_all = 0;     // sum_l sum_k M_k^l
    long long term_weak_users = 0;  // 2 * sum_l sum_{k>=2} M_k^l
    long long term_relay = 0;       // 2N
    long long bound = 0;            // min of the three
};

/// Requires a user-canonical config (users sorted non-increasing).
UpperBoundBreakdown dof_upper_bound(const NetworkConfig& config);

/// Per-destination DoF caps inside one cluster from the cut-set argument:
/// user 0 (strongest) is capped by min{M_1, N, sum of the others}; every
/// other user i by min{M_i, N}.
std::vector<std::pair<int, long long>> cutset_cluster_bounds(const NetworkConfig& config,
                                                             int cluster);

/// One step of the genie argument for a K-user cluster: at step k the genie
/// hands over the messages {(dest i, src k) : i > k} (none at step 0, where
/// own side information suffices), after which {(dest k, src i) : i > k}
/// become decodable.
struct GenieStep {
    int step = 0;  // zero-based user index whose messages become decodable
    std::vector<MessageId> genie_messages;
    std::vector<MessageId> decoded;
};

struct GenieSchedule {
    int users = 0;
    std::vector<GenieStep> steps;
    std::vector<MessageId> decodable;  // union of all decoded sets, K(K-1)/2 pairs

    /// The messages not in `decodable`: {(dest k, src i) : k > i}.
    std::vector<MessageId> mirror() const;
};

GenieSchedule genie_schedule(int users);

}  // namespace mwrc
