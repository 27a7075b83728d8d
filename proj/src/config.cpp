#include "mwrc/config.hpp"

#include "mwrc/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mwrc {

long long NetworkConfig::total_user_antennas() const {
    long long total = 0;
    for (const auto& cluster : clusters)
        total = std::accumulate(cluster.begin(), cluster.end(), total);
    return total;
}

long long NetworkConfig::weak_user_antennas() const {
    long long total = 0;
    for (const auto& cluster : clusters)
        for (std::size_t k = 1; k < cluster.size(); ++k) total += cluster[k];
    return total;
}

bool NetworkConfig::is_symmetric() const {
    if (clusters.empty()) return false;
    const std::size_t users = clusters.front().size();
    const int m = clusters.front().front();
    for (const auto& cluster : clusters) {
        if (cluster.size() != users) return false;
        for (int antennas : cluster)
            if (antennas != m) return false;
    }
    return true;
}

void validate(const NetworkConfig& config) {
    if (config.clusters.empty()) throw ValidationError("clusters: need at least one cluster");
    if (config.relay_antennas < 1) throw ValidationError("relay_antennas: must be >= 1");
    for (std::size_t l = 0; l < config.clusters.size(); ++l) {
        const auto& cluster = config.clusters[l];
        if (cluster.size() < 2)
            throw ValidationError("clusters[" + std::to_string(l) + "]: need at least 2 users");
        for (std::size_t k = 0; k < cluster.size(); ++k)
            if (cluster[k] < 1)
                throw ValidationError("clusters[" + std::to_string(l) + "][" + std::to_string(k) +
                                      "]: antenna count must be >= 1");
    }
}

bool Permutation::is_identity() const {
    for (std::size_t l = 0; l < cluster_map.size(); ++l)
        if (cluster_map[l] != static_cast<int>(l)) return false;
    for (const auto& users : user_map)
        for (std::size_t k = 0; k < users.size(); ++k)
            if (users[k] != static_cast<int>(k)) return false;
    return true;
}

CanonicalConfig canonicalize(const NetworkConfig& config, CanonicalMode mode) {
    validate(config);

    const int L = config.num_clusters();
    CanonicalConfig out;
    out.config.relay_antennas = config.relay_antennas;
    out.config.clusters.resize(L);
    out.perm.user_map.resize(L);

    // Sort users non-increasing within each cluster, remembering origins.
    std::vector<std::vector<int>> sorted(L);
    std::vector<std::vector<int>> user_origin(L);
    for (int l = 0; l < L; ++l) {
        const int K = config.users_in(l);
        std::vector<int> order(K);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return config.clusters[l][a] > config.clusters[l][b];
        });
        for (int k : order) {
            sorted[l].push_back(config.clusters[l][k]);
            user_origin[l].push_back(k);
        }
    }

    std::vector<int> cluster_order(L);
    std::iota(cluster_order.begin(), cluster_order.end(), 0);
    if (mode == CanonicalMode::catalog && L > 1) {
        // Order clusters so M_2^1 >= M_2^2 >= ...; ties broken by the larger
        // strongest user, then original index (stable sort).
        std::stable_sort(cluster_order.begin(), cluster_order.end(), [&](int a, int b) {
            const int second_a = sorted[a].size() > 1 ? sorted[a][1] : 0;
            const int second_b = sorted[b].size() > 1 ? sorted[b][1] : 0;
            if (second_a != second_b) return second_a > second_b;
            return sorted[a][0] > sorted[b][0];
        });
    }

    for (int pos = 0; pos < L; ++pos) {
        const int l = cluster_order[pos];
        out.config.clusters[pos] = sorted[l];
        out.perm.cluster_map.push_back(l);
        out.perm.user_map[pos] = user_origin[l];
    }
    return out;
}

bool is_user_canonical(const NetworkConfig& config) {
    for (const auto& cluster : config.clusters)
        if (!std::is_sorted(cluster.begin(), cluster.end(), std::greater<>())) return false;
    return true;
}

std::vector<MessageId> message_universe(const NetworkConfig& config) {
    std::vector<MessageId> out;
    for (int l = 0; l < config.num_clusters(); ++l) {
        const int K = config.users_in(l);
        for (int dest = 0; dest < K; ++dest)
            for (int src = 0; src < K; ++src)
                if (src != dest) out.push_back({l, dest, src});
    }
    return out;
}

std::string to_string(const NetworkConfig& config) {
    std::ostringstream os;
    os << "[";
    for (int l = 0; l < config.num_clusters(); ++l) {
        os << (l ? ",[" : "[");
        for (int k = 0; k < config.users_in(l); ++k) os << (k ? "," : "") << config.antennas(l, k);
        os << "]";
    }
    os << "], N=" << config.relay_antennas;
    return os.str();
}

}  // namespace mwrc
