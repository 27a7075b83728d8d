#pragma once

#include "mwrc/config.hpp"
#include "mwrc/report.hpp"

#include <array>
#include <optional>
#include <string>

namespace mwrc {

/// Full achievable-DoF decision tree for two clusters of two users
/// (arbitrary antennas). Requires a catalog-canonical config; every such
/// config lands in exactly one regime and carries an achievable value.
DoFReport classify_2x2(const NetworkConfig& config);

/// Optimal-DoF catalog for two clusters of three users: finds the binding
/// term of the five-term upper bound and checks that term's achievability
/// conditions. Outside those conditions optimality (and achievability) is
/// unknown.
DoFReport classify_2x3(const NetworkConfig& config);

/// Symmetric L-cluster K-user catalog: KLM when N >= KLM, 2N when
/// (LK(K-1)/2)(2M - N) >= N, otherwise unknown with bound min{KLM, 2N}.
DoFReport classify_symmetric(int clusters, int users, int antennas, int relay_antennas);

/// Routes to the most specific catalog (2x2, then 2x3, then symmetric);
/// uncataloged shapes get the three-term bound with regime "uncataloged".
DoFReport classify(const NetworkConfig& config);

/// Maps a regime label to its transmission strategy. Labels with unknown
/// achievability yield nullopt.
std::optional<StrategyDescriptor> regime_strategy(const std::string& label,
                                                  const NetworkConfig& config);

/// The optimal-DoF membership conditions for the 2x2 catalog, stated
/// independently of the achievability tree; used to cross-check that the
/// tree reports optimal exactly on these regimes.
std::optional<long long> theorem2_optimal_2x2(const NetworkConfig& config);

/// Optimal DoF of the symmetric 2x2 network (M1 >= M2 assumed), when the
/// catalog establishes it.
std::optional<long long> corollary1_symmetric(int m1, int m2, int n);

/// The five binding-term candidates of the 2x3 upper bound, in catalog
/// order: 2N, full sum, doubled weak sum, and the two mixed terms.
std::array<long long, 5> upper_bound_terms_2x3(const NetworkConfig& config);

}  // namespace mwrc
