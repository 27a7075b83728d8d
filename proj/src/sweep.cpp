#include "mwrc/sweep.hpp"

#include "mwrc/catalog.hpp"
#include "mwrc/channel.hpp"
#include "mwrc/errors.hpp"
#include "mwrc/scheme.hpp"

#include <cmath>
#include <exception>
#include <ostream>

namespace mwrc {

long long SweepSpec::cell_count() const {
    return static_cast<long long>(clusters.count()) * users.count() * m1.count() * m2.count() *
           relay.count();
}

NetworkConfig SweepSpec::cell_config(int l, int k, int m_first, int m_rest, int n) const {
    NetworkConfig cfg;
    std::vector<int> cluster(k, m_rest);
    cluster[0] = m_first;
    cfg.clusters.assign(l, cluster);
    cfg.relay_antennas = n;
    return cfg;
}

namespace {

SweepRow classify_cell(const SweepSpec& spec, long long index) {
    const int nn = spec.relay.count();
    const int nm2 = spec.m2.count();
    const int nm1 = spec.m1.count();
    const int nk = spec.users.count();

    const int n = spec.relay.lo + static_cast<int>(index % nn);
    index /= nn;
    const int m2 = spec.m2.lo + static_cast<int>(index % nm2);
    index /= nm2;
    const int m1 = spec.m1.lo + static_cast<int>(index % nm1);
    index /= nm1;
    const int k = spec.users.lo + static_cast<int>(index % nk);
    index /= nk;
    const int l = spec.clusters.lo + static_cast<int>(index);

    SweepRow row{l, k, m1, m2, n, {}};
    row.report = classify(canonicalize(spec.cell_config(l, k, m1, m2, n)).config);
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec, bool parallel) {
    const long long cells = spec.cell_count();
    std::vector<SweepRow> rows(cells);
    std::exception_ptr failure = nullptr;

    if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long i = 0; i < cells; ++i) {
            try {
                rows[i] = classify_cell(spec, i);
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
    } else {
        for (long long i = 0; i < cells; ++i) rows[i] = classify_cell(spec, i);
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "L,K,M1,M2,N,bound,achievable,regime,optimal\n";
    for (const auto& row : rows) {
        os << row.clusters << ',' << row.users << ',' << row.m1 << ',' << row.m2 << ','
           << row.relay << ',' << format_rational(row.report.upper_bound) << ','
           << (row.report.achievable ? format_rational(*row.report.achievable) : "-") << ','
           << row.report.regime << ',' << to_string(row.report.optimal) << '\n';
    }
}

std::vector<SimulationRow> run_simulations(const NetworkConfig& config,
                                           const StrategyDescriptor& descriptor,
                                           const std::vector<std::uint64_t>& seeds, double p_lo,
                                           double p_hi, bool parallel) {
    const long long count = static_cast<long long>(seeds.size());
    std::vector<SimulationRow> rows(count);
    std::exception_ptr failure = nullptr;

    auto run_one = [&](long long i) {
        const ChannelSet channels = sample_channels(config, seeds[i]);
        const TransmissionScheme scheme = build_scheme(config, descriptor, channels);
        SimulationRow row;
        row.seed = seeds[i];
        row.rate_lo = sum_rate(scheme, p_lo);
        row.rate_hi = sum_rate(scheme, p_hi);
        row.slope = (row.rate_hi - row.rate_lo) / (std::log2(p_hi) - std::log2(p_lo));
        rows[i] = row;
    };

    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < count; ++i) {
            try {
                run_one(i);
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
    } else {
        for (long long i = 0; i < count; ++i) run_one(i);
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

}  // namespace mwrc
