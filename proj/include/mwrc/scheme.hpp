#pragma once

#include "mwrc/channel.hpp"
#include "mwrc/config.hpp"
#include "mwrc/report.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace mwrc {

/// One directed data stream. For aligned streams, `partner` is the opposite
/// direction of the same relay dimension (its symbol is the side
/// information the destination subtracts).
struct StreamInfo {
    MessageId msg;       // cluster, dest, src
    int entity = 0;      // relay-side dimension carrying this stream
    bool aligned = false;
    int partner = -1;    // stream id of the opposite direction, or -1
    int tx_col = 0;      // column in the source user's beamformer
    int rx_row = 0;      // row in the destination user's filter matrix
};

/// Fully synthesized linear scheme in the (possibly symbol-extended,
/// antenna-restricted) relay space of dimension `relay_dims`.
struct TransmissionScheme {
    NetworkConfig config;
    StrategyDescriptor descriptor;
    int ext = 1;
    int relay_dims = 0;  // D: dimensions the relay actually listens to

    std::vector<std::vector<Eigen::MatrixXcd>> uplink_eff;    // [l][k]: D x ext*M
    std::vector<std::vector<Eigen::MatrixXcd>> downlink_eff;  // [l][k]: ext*M x D
    std::vector<std::vector<Eigen::MatrixXcd>> beamformers;   // [l][k]: ext*M x sent
    std::vector<std::vector<Eigen::MatrixXcd>> rx_filters;    // [l][k]: received x ext*M
    Eigen::MatrixXcd relay_decode;   // D x D, zero-forcing over arrival directions
    Eigen::MatrixXcd relay_precode;  // D x D, right inverse of effective receive rows

    std::vector<StreamInfo> streams;

    double alignment_residual = 0.0;  // worst defining-identity residual
    double max_condition = 1.0;       // cond of the stacked relay matrices

    Rational stream_dof() const { return {static_cast<long long>(streams.size()), ext}; }
};

/// Synthesizes beamformers, relay matrices and receive filters for a
/// feasible descriptor on one channel realization. Throws PlanError on an
/// infeasible descriptor (naming the violated invariant) and
/// ConditioningError when a stacked matrix exceeds condition number 1e10.
TransmissionScheme build_scheme(const NetworkConfig& config, const StrategyDescriptor& descriptor,
                                const ChannelSet& channels);

struct SimulationResult {
    bool ok = false;
    double max_residual = 0.0;
    std::vector<std::pair<int, double>> failures;  // (stream id, residual)
};

/// Exact noiseless round trip: every destination must recover its intended
/// symbols within relative residual 1e-6. Aligned streams pass through the
/// sum-then-cancel path, MAC streams are decoded directly.
SimulationResult simulate_noiseless(const TransmissionScheme& scheme,
                                    const std::vector<std::complex<double>>& symbols);

/// Achievable-rate proxy in bits per channel use: per-stream zero-forcing
/// SNRs with uniform power, uplink and downlink each weighted half.
double sum_rate(const TransmissionScheme& scheme, double power);

/// (rate(P_hi) - rate(P_lo)) / (log2 P_hi - log2 P_lo). Requires
/// P_hi >= 100 * P_lo.
double estimate_dof_slope(const TransmissionScheme& scheme, double p_lo, double p_hi);

}  // namespace mwrc
