#include "mwrc/scheme.hpp"

#include "mwrc/alignment.hpp"
#include "mwrc/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>

namespace mwrc {

namespace {

constexpr double kMaxCondition = 1e10;

// Effective uplink of one user: ext block-diagonal copies of the first
// n_prime relay rows, truncated to the dims the relay listens to.
Eigen::MatrixXcd effective_uplink(const Eigen::MatrixXcd& h, int n_prime, int ext, int dims) {
    const int m = static_cast<int>(h.cols());
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(ext * n_prime, ext * m);
    for (int e = 0; e < ext; ++e)
        full.block(e * n_prime, e * m, n_prime, m) = h.topRows(n_prime);
    return full.topRows(dims);
}

// Dual restriction on the downlink side: first n_prime relay columns.
Eigen::MatrixXcd effective_downlink(const Eigen::MatrixXcd& h, int n_prime, int ext, int dims) {
    const int m = static_cast<int>(h.rows());
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(ext * m, ext * n_prime);
    for (int e = 0; e < ext; ++e)
        full.block(e * m, e * n_prime, m, n_prime) = h.leftCols(n_prime);
    return full.leftCols(dims);
}

double condition_number(const Eigen::MatrixXcd& m) {
    if (m.rows() == 0) return 1.0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 0.0) return std::numeric_limits<double>::infinity();
    return sv(0) / (sv(sv.size() - 1));
}

// Minimal Edmonds-Karp max flow for the MAC stream routing. Node count is
// 2K + 2 per cluster, so performance is irrelevant; determinism is not.
struct FlowNetwork {
    struct Edge {
        int to, cap, flow = 0;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj;

    explicit FlowNetwork(int nodes) : adj(nodes) {}

    void add_edge(int from, int to, int cap) {
        adj[from].push_back(static_cast<int>(edges.size()));
        edges.push_back({to, cap});
        adj[to].push_back(static_cast<int>(edges.size()));
        edges.push_back({from, 0});
    }

    int max_flow(int source, int sink) {
        int total = 0;
        while (true) {
            std::vector<int> parent_edge(adj.size(), -1);
            std::deque<int> queue{source};
            parent_edge[source] = -2;
            while (!queue.empty() && parent_edge[sink] == -1) {
                const int node = queue.front();
                queue.pop_front();
                for (int id : adj[node]) {
                    const auto& e = edges[id];
                    if (parent_edge[e.to] == -1 && e.cap > e.flow) {
                        parent_edge[e.to] = id;
                        queue.push_back(e.to);
                    }
                }
            }
            if (parent_edge[sink] == -1) return total;
            int bottleneck = std::numeric_limits<int>::max();
            for (int v = sink; v != source;) {
                const auto& e = edges[parent_edge[v]];
                bottleneck = std::min(bottleneck, e.cap - e.flow);
                v = edges[parent_edge[v] ^ 1].to;
            }
            for (int v = sink; v != source;) {
                edges[parent_edge[v]].flow += bottleneck;
                edges[parent_edge[v] ^ 1].flow -= bottleneck;
                v = edges[parent_edge[v] ^ 1].to;
            }
            total += bottleneck;
        }
    }
};

// Routes MAC streams of one cluster to destinations: supply[k] streams leave
// user k, user i can absorb recv_cap[i]. Returns routed[src][dst].
std::vector<std::vector<int>> route_mac_cluster(const std::vector<int>& supply,
                                                const std::vector<int>& recv_cap) {
    const int users = static_cast<int>(supply.size());
    const int total = std::accumulate(supply.begin(), supply.end(), 0);
    if (total == 0) return std::vector<std::vector<int>>(users, std::vector<int>(users, 0));

    // Nodes: 0 source, 1..K senders, K+1..2K receivers, 2K+1 sink.
    FlowNetwork net(2 * users + 2);
    const int sink = 2 * users + 1;
    std::vector<std::vector<int>> middle_edge(users, std::vector<int>(users, -1));
    for (int k = 0; k < users; ++k) {
        net.add_edge(0, 1 + k, supply[k]);
        net.add_edge(1 + users + k, sink, recv_cap[k]);
    }
    for (int k = 0; k < users; ++k)
        for (int i = 0; i < users; ++i)
            if (i != k) {
                middle_edge[k][i] = static_cast<int>(net.edges.size());
                net.add_edge(1 + k, 1 + users + i, total);
            }

    if (net.max_flow(0, sink) != total)
        throw PlanError("build_scheme: MAC streams cannot be routed within receive budgets");

    std::vector<std::vector<int>> routed(users, std::vector<int>(users, 0));
    for (int k = 0; k < users; ++k)
        for (int i = 0; i < users; ++i)
            if (i != k) routed[k][i] = net.edges[middle_edge[k][i]].flow;
    return routed;
}

}  // namespace

TransmissionScheme build_scheme(const NetworkConfig& config, const StrategyDescriptor& descriptor,
                                const ChannelSet& channels) {
    validate(config);
    validate_descriptor(config, descriptor);

    TransmissionScheme scheme;
    scheme.config = config;
    scheme.descriptor = descriptor;
    scheme.ext = descriptor.extension_factor;
    scheme.relay_dims = descriptor.total_relay_dims();

    const int L = config.num_clusters();
    const int ext = scheme.ext;
    const int dims = scheme.relay_dims;
    const int n_prime = descriptor.relay_antennas_used;

    scheme.uplink_eff.resize(L);
    scheme.downlink_eff.resize(L);
    scheme.beamformers.resize(L);
    scheme.rx_filters.resize(L);
    for (int l = 0; l < L; ++l) {
        for (int k = 0; k < config.users_in(l); ++k) {
            scheme.uplink_eff[l].push_back(
                effective_uplink(channels.uplink[l][k], n_prime, ext, dims));
            scheme.downlink_eff[l].push_back(
                effective_downlink(channels.downlink[l][k], n_prime, ext, dims));
        }
    }
    if (dims == 0) {
        scheme.relay_decode.resize(0, 0);
        scheme.relay_precode.resize(0, 0);
        for (int l = 0; l < L; ++l)
            for (int k = 0; k < config.users_in(l); ++k) {
                scheme.beamformers[l].emplace_back(ext * config.antennas(l, k), 0);
                scheme.rx_filters[l].emplace_back(0, ext * config.antennas(l, k));
            }
        return scheme;
    }

    // Per-user accumulation of transmit columns and receive rows.
    std::vector<std::vector<std::vector<Eigen::VectorXcd>>> tx_cols(L), rx_rows(L);
    std::vector<std::vector<int>> ssa_load(L);
    for (int l = 0; l < L; ++l) {
        tx_cols[l].resize(config.users_in(l));
        rx_rows[l].resize(config.users_in(l));
        ssa_load[l].assign(config.users_in(l), 0);
    }

    Eigen::MatrixXcd arrival(dims, dims);        // relay-side direction matrix
    Eigen::MatrixXcd effective_rows(dims, dims); // stacked downlink rows
    int entity = 0;

    // Aligned pairs: beamformers from the shared subspace of the effective
    // uplinks, filters from the transpose-dual problem on the downlinks.
    for (const auto& [key, pair_dims] : descriptor.aligned_dims) {
        const int l = key.cluster;
        const int ui = key.user_i;
        const int uj = key.user_j;

        const SharedSubspace ssa =
            shared_subspace(scheme.uplink_eff[l][ui], scheme.uplink_eff[l][uj], pair_dims);
        const ReceiverFilters filters =
            receiver_filters(scheme.downlink_eff[l][ui], scheme.downlink_eff[l][uj], pair_dims);
        scheme.alignment_residual =
            std::max({scheme.alignment_residual, ssa.residual, filters.residual});

        for (int m = 0; m < pair_dims; ++m) {
            arrival.col(entity) = ssa.q[m];
            effective_rows.row(entity) = filters.g[m].transpose();

            StreamInfo fwd;  // ui -> uj
            fwd.msg = {l, uj, ui};
            fwd.entity = entity;
            fwd.aligned = true;
            fwd.tx_col = static_cast<int>(tx_cols[l][ui].size());
            fwd.rx_row = static_cast<int>(rx_rows[l][uj].size());
            StreamInfo bwd;  // uj -> ui
            bwd.msg = {l, ui, uj};
            bwd.entity = entity;
            bwd.aligned = true;
            bwd.tx_col = static_cast<int>(tx_cols[l][uj].size());
            bwd.rx_row = static_cast<int>(rx_rows[l][ui].size());
            fwd.partner = static_cast<int>(scheme.streams.size()) + 1;
            bwd.partner = static_cast<int>(scheme.streams.size());
            scheme.streams.push_back(fwd);
            scheme.streams.push_back(bwd);

            tx_cols[l][ui].push_back(ssa.u[m]);
            tx_cols[l][uj].push_back(ssa.w[m]);
            rx_rows[l][uj].push_back(filters.u2[m]);
            rx_rows[l][ui].push_back(filters.u1[m]);
            ++entity;
        }
        ssa_load[l][ui] += pair_dims;
        ssa_load[l][uj] += pair_dims;
    }

    // MAC streams: raw transmit columns, raw receive rows, routed to
    // destinations by a max-flow over the remaining receive budgets.
    for (int l = 0; l < L; ++l) {
        const int users = config.users_in(l);
        std::vector<int> supply(users, 0), recv_cap(users, 0);
        for (int k = 0; k < users; ++k) {
            if (auto it = descriptor.mac_streams.find({l, k}); it != descriptor.mac_streams.end())
                supply[k] = it->second;
            recv_cap[k] = ext * config.antennas(l, k) - ssa_load[l][k];
        }
        if (std::accumulate(supply.begin(), supply.end(), 0) == 0) continue;
        const auto routed = route_mac_cluster(supply, recv_cap);

        std::vector<int> next_tx_antenna(users, 0), next_rx_antenna(users, 0);
        for (int src = 0; src < users; ++src) {
            for (int dst = 0; dst < users; ++dst) {
                for (int copy = 0; copy < routed[src][dst]; ++copy) {
                    const int m_src = ext * config.antennas(l, src);
                    const int m_dst = ext * config.antennas(l, dst);
                    Eigen::VectorXcd beam = Eigen::VectorXcd::Zero(m_src);
                    beam(next_tx_antenna[src]++) = 1.0;
                    Eigen::VectorXcd row = Eigen::VectorXcd::Zero(m_dst);
                    row(next_rx_antenna[dst]++) = 1.0;

                    arrival.col(entity) = scheme.uplink_eff[l][src] * beam;
                    effective_rows.row(entity) = row.transpose() * scheme.downlink_eff[l][dst];

                    StreamInfo info;
                    info.msg = {l, dst, src};
                    info.entity = entity;
                    info.aligned = false;
                    info.tx_col = static_cast<int>(tx_cols[l][src].size());
                    info.rx_row = static_cast<int>(rx_rows[l][dst].size());
                    scheme.streams.push_back(info);

                    tx_cols[l][src].push_back(std::move(beam));
                    rx_rows[l][dst].push_back(std::move(row));
                    ++entity;
                }
            }
        }
    }

    if (entity != dims)
        throw PlanError("build_scheme: descriptor dims and synthesized entities disagree");

    const double cond_arrival = condition_number(arrival);
    const double cond_rows = condition_number(effective_rows);
    scheme.max_condition = std::max(cond_arrival, cond_rows);
    if (scheme.max_condition > kMaxCondition)
        throw ConditioningError("build_scheme: stacked matrix condition number " +
                                std::to_string(scheme.max_condition) +
                                " exceeds 1e10; resample the channels");

    scheme.relay_decode = arrival.inverse();
    scheme.relay_precode = effective_rows.inverse();

    for (int l = 0; l < L; ++l)
        for (int k = 0; k < config.users_in(l); ++k) {
            const int m = ext * config.antennas(l, k);
            Eigen::MatrixXcd beams(m, static_cast<int>(tx_cols[l][k].size()));
            for (std::size_t c = 0; c < tx_cols[l][k].size(); ++c) beams.col(c) = tx_cols[l][k][c];
            Eigen::MatrixXcd filt(static_cast<int>(rx_rows[l][k].size()), m);
            for (std::size_t r = 0; r < rx_rows[l][k].size(); ++r)
                filt.row(r) = rx_rows[l][k][r].transpose();
            scheme.beamformers[l].push_back(std::move(beams));
            scheme.rx_filters[l].push_back(std::move(filt));
        }
    return scheme;
}

SimulationResult simulate_noiseless(const TransmissionScheme& scheme,
                                    const std::vector<std::complex<double>>& symbols) {
    if (symbols.size() != scheme.streams.size())
        throw ValidationError("simulate_noiseless: one symbol per stream required");

    SimulationResult result;
    result.ok = true;
    if (scheme.streams.empty()) return result;

    const auto& cfg = scheme.config;
    const int L = cfg.num_clusters();

    // Uplink: everyone transmits, the relay observes the superposition.
    Eigen::VectorXcd y_relay = Eigen::VectorXcd::Zero(scheme.relay_dims);
    for (std::size_t s = 0; s < scheme.streams.size(); ++s) {
        const auto& info = scheme.streams[s];
        const int l = info.msg.cluster;
        const int src = info.msg.src;
        y_relay += scheme.uplink_eff[l][src] * scheme.beamformers[l][src].col(info.tx_col) *
                   symbols[s];
    }

    // The relay zero-forces the arrival directions and forwards the decoded
    // values (sums for aligned dimensions, symbols for MAC streams).
    const Eigen::VectorXcd decoded_entities = scheme.relay_decode * y_relay;
    const Eigen::VectorXcd x_relay = scheme.relay_precode * decoded_entities;

    std::vector<std::vector<Eigen::VectorXcd>> filtered(L);
    for (int l = 0; l < L; ++l)
        for (int k = 0; k < cfg.users_in(l); ++k)
            filtered[l].push_back(scheme.rx_filters[l][k] * (scheme.downlink_eff[l][k] * x_relay));

    for (std::size_t s = 0; s < scheme.streams.size(); ++s) {
        const auto& info = scheme.streams[s];
        const int l = info.msg.cluster;
        std::complex<double> value = filtered[l][info.msg.dest](info.rx_row);
        if (info.aligned) value -= symbols[info.partner];  // own side information
        const double residual =
            std::abs(value - symbols[s]) / std::max(1.0, std::abs(symbols[s]));
        result.max_residual = std::max(result.max_residual, residual);
        if (residual > 1e-6) {
            result.ok = false;
            result.failures.emplace_back(static_cast<int>(s), residual);
        }
    }
    return result;
}

double sum_rate(const TransmissionScheme& scheme, double power) {
    if (power <= 0.0) throw ValidationError("sum_rate: power must be positive");
    if (scheme.streams.empty()) return 0.0;

    const int dims = scheme.relay_dims;
    double uplink_bits = 0.0, downlink_bits = 0.0;
    for (const auto& info : scheme.streams) {
        const int l = info.msg.cluster;
        const auto& beams = scheme.beamformers[l][info.msg.src];
        const double sent = static_cast<double>(beams.cols());
        const double beam_power = beams.col(info.tx_col).squaredNorm();
        const double relay_noise = scheme.relay_decode.row(info.entity).squaredNorm();
        const double snr_up = power / (sent * beam_power * relay_noise);
        uplink_bits += std::log2(1.0 + snr_up);

        const double precode_power = scheme.relay_precode.col(info.entity).squaredNorm();
        const double filter_noise =
            scheme.rx_filters[l][info.msg.dest].row(info.rx_row).squaredNorm();
        const double snr_down = power / (dims * precode_power * filter_noise);
        downlink_bits += std::log2(1.0 + snr_down);
    }
    return 0.5 * (uplink_bits + downlink_bits) / scheme.ext;
}

double estimate_dof_slope(const TransmissionScheme& scheme, double p_lo, double p_hi) {
    if (!(p_hi >= 100.0 * p_lo) || p_lo <= 0.0)
        throw ValidationError("estimate_dof_slope: need P_hi >= 100 * P_lo > 0");
    return (sum_rate(scheme, p_hi) - sum_rate(scheme, p_lo)) / (std::log2(p_hi) - std::log2(p_lo));
}

}  // namespace mwrc
