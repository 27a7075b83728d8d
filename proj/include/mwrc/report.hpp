#pragma once

#include "mwrc/bounds.hpp"
#include "mwrc/config.hpp"
#include "mwrc/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace mwrc {

/// An unordered user pair inside one cluster (user_i < user_j).
struct PairKey {
    int cluster = 0;
    int user_i = 0;
    int user_j = 0;

    auto operator<=>(const PairKey&) const = default;
};

struct UserKey {
    int cluster = 0;
    int user = 0;

    auto operator<=>(const UserKey&) const = default;
};

/// Blueprint of a transmission scheme: which relay dimensions are shared by
/// aligned pairs, which carry plain multiple-access streams, how many relay
/// antennas participate and over how many channel uses the scheme extends.
/// All stream/dimension counts live in the symbol-extended space.
struct StrategyDescriptor {
    int relay_antennas_used = 0;  // N' <= N, physical antennas
    int extension_factor = 1;     // >= 1 channel uses per block

    /// Relay dimensions reserved per aligned pair; the pair exchanges two
    /// streams per dimension (one each direction).
    std::map<PairKey, int> aligned_dims;
    /// Plain multiple-access streams sent per user.
    std::map<UserKey, int> mac_streams;

    /// Total relay dimensions consumed: sum of aligned dims + MAC streams.
    int total_relay_dims() const {
        int total = 0;
        for (const auto& [key, dims] : aligned_dims) total += dims;
        for (const auto& [key, streams] : mac_streams) total += streams;
        return total;
    }

    /// Streams delivered per extended block: 2 per aligned dimension plus
    /// one per MAC stream.
    int total_streams() const {
        int total = 0;
        for (const auto& [key, dims] : aligned_dims) total += 2 * dims;
        for (const auto& [key, streams] : mac_streams) total += streams;
        return total;
    }

    /// Interference-free streams per channel use.
    Rational stream_dof() const { return {total_streams(), extension_factor}; }

    /// Streams transmitted by one user (aligned + MAC).
    int streams_sent_by(int cluster, int user) const;
};

/// Throws PlanError naming the violated invariant: relay dimension budget,
/// per-user stream budget, or a pair allocation beyond its shared dimension.
void validate_descriptor(const NetworkConfig& config, const StrategyDescriptor& desc);

enum class Optimality { optimal, suboptimal_known_gap, unknown };

std::string to_string(Optimality o);

/// Everything the classifier knows about one configuration.
struct DoFReport {
    UpperBoundBreakdown breakdown;     // three-term bound
    Rational upper_bound{0};           // catalog bound (may refine the min above)
    std::optional<Rational> achievable;
    std::string regime;
    Optimality optimal = Optimality::unknown;
    std::optional<StrategyDescriptor> strategy;
};

}  // namespace mwrc
