#pragma once

#include "mwrc/config.hpp"
#include "mwrc/report.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace mwrc {

struct SweepRange {
    int lo = 0;
    int hi = 0;

    int count() const { return hi - lo + 1; }
};

/// Grid specification: each cell (L, K, M1, M2, N) classifies the network of
/// L clusters with K users per cluster, user 1 holding M1 antennas and the
/// others M2.
struct SweepSpec {
    SweepRange clusters{1, 1};
    SweepRange users{2, 2};
    SweepRange m1{1, 1};
    SweepRange m2{1, 1};
    SweepRange relay{1, 1};
    std::vector<std::uint64_t> seeds{0};

    long long cell_count() const;
    NetworkConfig cell_config(int l, int k, int m_first, int m_rest, int n) const;
};

struct SweepRow {
    int clusters, users, m1, m2, relay;
    DoFReport report;
};

/// Classifies every grid cell in lexicographic (L, K, M1, M2, N) order.
/// The parallel path fans cells out over OpenMP threads; results land in
/// their deterministic slots, so both paths produce identical rows.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, bool parallel);

/// CSV contract: header "L,K,M1,M2,N,bound,achievable,regime,optimal",
/// rationals printed p/q, absent achievable printed "-".
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

struct SimulationRow {
    std::uint64_t seed = 0;
    double rate_lo = 0.0;
    double rate_hi = 0.0;
    double slope = 0.0;
};

/// Builds the descriptor's scheme on one channel realization per seed and
/// estimates the rate slope between p_lo and p_hi. Seeds fan out over OpenMP
/// threads in the parallel path; row order follows the seed list either way.
std::vector<SimulationRow> run_simulations(const NetworkConfig& config,
                                           const StrategyDescriptor& descriptor,
                                           const std::vector<std::uint64_t>& seeds, double p_lo,
                                           double p_hi, bool parallel);

}  // namespace mwrc
