#pragma once

#include "mwrc/config.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace mwrc {

/// One sampled realization of all uplink/downlink channel matrices.
/// uplink[l][k] is N x M_k^l (user to relay), downlink[l][k] is M_k^l x N.
struct ChannelSet {
    std::vector<std::vector<Eigen::MatrixXcd>> uplink;
    std::vector<std::vector<Eigen::MatrixXcd>> downlink;
    std::uint64_t seed = 0;
};

/// Entries are i.i.d. CN(0,1); deterministic for a fixed (config, seed).
/// If any matrix fails the relative-rank check (min sv > 1e-9 * max sv) the
/// whole set is resampled with an incremented sub-seed, at most 16 times.
ChannelSet sample_channels(const NetworkConfig& config, std::uint64_t seed);

/// Numerical rank with a relative singular-value threshold.
int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol = 1e-9);

}  // namespace mwrc
