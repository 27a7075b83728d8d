#include "mwrc/bounds.hpp"

#include "mwrc/errors.hpp"

#include <algorithm>

namespace mwrc {

UpperBoundBreakdown dof_upper_bound(const NetworkConfig& config) {
    validate(config);
    if (!is_user_canonical(config))
        throw ValidationError("dof_upper_bound: config must be user-canonical");

    UpperBoundBreakdown b;
    b.term_sum_all = config.total_user_antennas();
    b.term_weak_users = 2 * config.weak_user_antennas();
    b.term_relay = 2LL * config.relay_antennas;
    b.bound = std::min({b.term_sum_all, b.term_weak_users, b.term_relay});
    return b;
}

std::vector<std::pair<int, long long>> cutset_cluster_bounds(const NetworkConfig& config,
                                                             int cluster) {
    validate(config);
    if (cluster < 0 || cluster >= config.num_clusters())
        throw ValidationError("cutset_cluster_bounds: cluster index out of range");
    if (!is_user_canonical(config))
        throw ValidationError("cutset_cluster_bounds: config must be user-canonical");

    const auto& m = config.clusters[cluster];
    const long long n = config.relay_antennas;
    long long weak_sum = 0;
    for (std::size_t k = 1; k < m.size(); ++k) weak_sum += m[k];

    std::vector<std::pair<int, long long>> caps;
    caps.emplace_back(0, std::min({static_cast<long long>(m[0]), n, weak_sum}));
    for (std::size_t i = 1; i < m.size(); ++i)
        caps.emplace_back(static_cast<int>(i), std::min(static_cast<long long>(m[i]), n));
    return caps;
}

GenieSchedule genie_schedule(int users) {
    if (users < 2) throw ValidationError("genie_schedule: need K >= 2");

    GenieSchedule sched;
    sched.users = users;
    for (int k = 0; k + 1 < users; ++k) {
        GenieStep step;
        step.step = k;
        if (k > 0)
            for (int i = k + 1; i < users; ++i) step.genie_messages.push_back({0, i, k});
        for (int i = k + 1; i < users; ++i) {
            step.decoded.push_back({0, k, i});
            sched.decodable.push_back({0, k, i});
        }
        sched.steps.push_back(std::move(step));
    }
    return sched;
}

std::vector<MessageId> GenieSchedule::mirror() const {
    std::vector<MessageId> out;
    for (int dest = 0; dest < users; ++dest)
        for (int src = 0; src < dest; ++src) out.push_back({0, dest, src});
    return out;
}

}  // namespace mwrc
