#pragma once

#include <string>
#include <vector>

namespace mwrc {

/// Antenna layout of an L-cluster multi-way relay network. clusters[l][k] is
/// the antenna count of user k in cluster l; the relay has relay_antennas.
struct NetworkConfig {
    std::vector<std::vector<int>> clusters;
    int relay_antennas = 0;

    int num_clusters() const { return static_cast<int>(clusters.size()); }
    int users_in(int l) const { return static_cast<int>(clusters[l].size()); }
    int antennas(int l, int k) const { return clusters[l][k]; }

    /// Sum of all user antenna counts.
    long long total_user_antennas() const;
    /// Sum over clusters of all but the strongest user's antennas. Requires
    /// canonical (sorted) user order.
    long long weak_user_antennas() const;

    /// True when all clusters have the same user count and every user has the
    /// same antenna count.
    bool is_symmetric() const;

    bool operator==(const NetworkConfig&) const = default;
};

/// Throws ValidationError unless every cluster has >= 2 users and every
/// antenna count is >= 1 (and the relay has >= 1 antenna).
void validate(const NetworkConfig& config);

/// Maps canonical indices back to the labels of the raw input config:
/// original cluster of canonical cluster l is cluster_map[l], original user
/// of canonical user k in canonical cluster l is user_map[l][k].
struct Permutation {
    std::vector<int> cluster_map;
    std::vector<std::vector<int>> user_map;

    bool is_identity() const;
};

struct CanonicalConfig {
    NetworkConfig config;
    Permutation perm;
};

enum class CanonicalMode {
    users_only,  // sort users within each cluster, keep cluster order
    catalog,     // additionally order clusters (M_2 desc, then M_1 desc)
};

/// Sorts users non-increasing within each cluster; in catalog mode also
/// orders clusters by second-largest antenna count (ties broken by largest
/// count, then original index) so the 2x2 catalog's premises hold.
CanonicalConfig canonicalize(const NetworkConfig& config,
                             CanonicalMode mode = CanonicalMode::catalog);

/// True when users are sorted non-increasing in every cluster.
bool is_user_canonical(const NetworkConfig& config);

/// One directed message: user `src` in cluster `cluster` talks to user
/// `dest` of the same cluster. Indices are zero-based.
struct MessageId {
    int cluster = 0;
    int dest = 0;
    int src = 0;

    auto operator<=>(const MessageId&) const = default;
};

/// All messages of the network in stable (cluster, dest, src) order; exactly
/// K_l(K_l - 1) entries per cluster.
std::vector<MessageId> message_universe(const NetworkConfig& config);

std::string to_string(const NetworkConfig& config);

}  // namespace mwrc
