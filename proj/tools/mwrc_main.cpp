#include "mwrc/catalog.hpp"
#include "mwrc/channel.hpp"
#include "mwrc/config_io.hpp"
#include "mwrc/errors.hpp"
#include "mwrc/scheme.hpp"
#include "mwrc/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>

namespace {

// Exit codes: 0 ok, 1 internal/verification failure, 2 parse or validation
// error, 3 no constructive scheme in catalog, 4 SNR precondition, 5
// oversize sweep.
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitNoScheme = 3;
constexpr int kExitSnr = 4;
constexpr int kExitOversize = 5;

constexpr long long kMaxSweepCells = 1'000'000;

std::string describe_permutation(const mwrc::Permutation& perm) {
    std::string out = "clusters (";
    for (std::size_t l = 0; l < perm.cluster_map.size(); ++l)
        out += (l ? "," : "") + std::to_string(perm.cluster_map[l] + 1);
    out += ")";
    return out;
}

std::string describe_strategy(const mwrc::StrategyDescriptor& d) {
    std::string out = "N'=" + std::to_string(d.relay_antennas_used) +
                      ", extension=" + std::to_string(d.extension_factor);
    if (!d.aligned_dims.empty()) {
        out += ", aligned";
        for (const auto& [key, dims] : d.aligned_dims)
            out += " (" + std::to_string(key.cluster + 1) + ":" + std::to_string(key.user_i + 1) +
                   "," + std::to_string(key.user_j + 1) + ")x" + std::to_string(dims);
    }
    if (!d.mac_streams.empty()) {
        out += ", mac";
        for (const auto& [key, streams] : d.mac_streams)
            out += " (" + std::to_string(key.cluster + 1) + ":" + std::to_string(key.user + 1) +
                   ")x" + std::to_string(streams);
    }
    return out;
}

std::string optimality_phrase(mwrc::Optimality o) {
    switch (o) {
        case mwrc::Optimality::optimal: return "OPTIMAL";
        case mwrc::Optimality::suboptimal_known_gap: return "SUBOPTIMAL (known gap)";
        case mwrc::Optimality::unknown: return "UNKNOWN optimality";
    }
    return "UNKNOWN optimality";
}

std::vector<std::complex<double>> random_unit_symbols(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    std::vector<std::complex<double>> symbols(count);
    for (auto& s : symbols) s = std::polar(1.0, angle(rng));
    return symbols;
}

int cmd_dof(const std::string& config_path) {
    const mwrc::NetworkConfig raw = mwrc::load_config(config_path);
    const mwrc::CanonicalConfig canonical = mwrc::canonicalize(raw);
    const mwrc::DoFReport report = mwrc::classify(canonical.config);

    std::cout << "config: " << mwrc::to_string(canonical.config) << "\n";
    if (!canonical.perm.is_identity())
        std::cout << "note: canonicalized, " << describe_permutation(canonical.perm)
                  << " of the input (tie-break by stronger user)\n";
    std::cout << "terms: sum_all=" << report.breakdown.term_sum_all
              << ", weak_users=" << report.breakdown.term_weak_users
              << ", relay=" << report.breakdown.term_relay << "\n";
    std::cout << "bound " << mwrc::format_rational(report.upper_bound) << ", achievable "
              << (report.achievable ? mwrc::format_rational(*report.achievable) : "-")
              << ", regime " << report.regime << ", " << optimality_phrase(report.optimal)
              << "\n";
    if (report.strategy)
        std::cout << "strategy: " << describe_strategy(*report.strategy) << "\n";
    return 0;
}

int cmd_plan(const std::string& config_path, std::uint64_t seed, bool verify) {
    const mwrc::NetworkConfig raw = mwrc::load_config(config_path);
    const mwrc::CanonicalConfig canonical = mwrc::canonicalize(raw);
    const mwrc::DoFReport report = mwrc::classify(canonical.config);
    if (!report.strategy) {
        std::cerr << "no constructive scheme in catalog for regime " << report.regime << "\n";
        return kExitNoScheme;
    }

    std::cout << "config: " << mwrc::to_string(canonical.config) << "\n";
    std::cout << "regime " << report.regime << ", achievable "
              << mwrc::format_rational(*report.achievable) << "\n";
    std::cout << "descriptor: " << describe_strategy(*report.strategy) << "\n";

    const mwrc::ChannelSet channels = mwrc::sample_channels(canonical.config, seed);
    const mwrc::TransmissionScheme scheme =
        mwrc::build_scheme(canonical.config, *report.strategy, channels);
    std::printf("seed %llu: alignment residual %.3e, condition %.3e, streams %zu, stream DoF %s\n",
                static_cast<unsigned long long>(seed), scheme.alignment_residual,
                scheme.max_condition, scheme.streams.size(),
                mwrc::format_rational(scheme.stream_dof()).c_str());

    if (verify) {
        const auto result =
            mwrc::simulate_noiseless(scheme, random_unit_symbols(scheme.streams.size(), seed));
        std::printf("verify: %s (max residual %.3e)\n", result.ok ? "PASS" : "FAIL",
                    result.max_residual);
        if (!result.ok) {
            for (const auto& [stream, residual] : result.failures)
                std::printf("  stream %d residual %.3e\n", stream, residual);
            return kExitFailure;
        }
    }
    return 0;
}

int cmd_simulate(const std::string& config_path, double snr_lo, double snr_hi, int seed_count) {
    if (!(snr_hi >= 100.0 * snr_lo) || snr_lo <= 0.0) {
        std::cerr << "need --snr-hi >= 100 * --snr-lo > 0\n";
        return kExitSnr;
    }
    const mwrc::NetworkConfig raw = mwrc::load_config(config_path);
    const mwrc::CanonicalConfig canonical = mwrc::canonicalize(raw);
    const mwrc::DoFReport report = mwrc::classify(canonical.config);
    if (!report.strategy) {
        std::cerr << "no constructive scheme in catalog for regime " << report.regime << "\n";
        return kExitNoScheme;
    }

    std::vector<std::uint64_t> seeds(seed_count);
    for (int i = 0; i < seed_count; ++i) seeds[i] = static_cast<std::uint64_t>(i);
    const auto rows = mwrc::run_simulations(canonical.config, *report.strategy, seeds, snr_lo,
                                            snr_hi, true);

    const std::string predicted = mwrc::format_rational(report.strategy->stream_dof());
    std::cout << "seed,rate_lo,rate_hi,slope,predicted_dof\n";
    for (const auto& row : rows)
        std::printf("%llu,%.6g,%.6g,%.6g,%s\n", static_cast<unsigned long long>(row.seed),
                    row.rate_lo, row.rate_hi, row.slope, predicted.c_str());
    return 0;
}

int cmd_sweep(const std::string& sweep_path) {
    const mwrc::SweepSpec spec = mwrc::load_sweep_spec(sweep_path);
    if (spec.cell_count() > kMaxSweepCells) {
        std::cerr << "sweep has " << spec.cell_count() << " cells, limit is " << kMaxSweepCells
                  << "\n";
        return kExitOversize;
    }
    const auto rows = mwrc::run_sweep(spec, true);
    mwrc::write_sweep_csv(std::cout, rows);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DoF bounds, regime classification and scheme synthesis for the MIMO "
                 "multi-way relay channel"};
    app.require_subcommand(1);

    std::string config_path, sweep_path;
    std::uint64_t seed = 0;
    bool verify = false;
    double snr_lo = 1e4, snr_hi = 1e6;
    int seed_count = 10;

    auto* dof = app.add_subcommand("dof", "upper bound, regime and achievable DoF");
    dof->add_option("config", config_path, "network JSON file")->required();

    auto* plan = app.add_subcommand("plan", "synthesize a transmission scheme");
    plan->add_option("config", config_path, "network JSON file")->required();
    plan->add_option("--seed", seed, "channel realization seed");
    plan->add_flag("--verify", verify, "run the noiseless round trip");

    auto* simulate = app.add_subcommand("simulate", "finite-SNR rate slopes over seeds");
    simulate->add_option("config", config_path, "network JSON file")->required();
    simulate->add_option("--snr-lo", snr_lo, "lower power point");
    simulate->add_option("--snr-hi", snr_hi, "upper power point");
    simulate->add_option("--seeds", seed_count, "number of seeds");

    auto* sweep = app.add_subcommand("sweep", "classify a parameter grid to CSV");
    sweep->add_option("spec", sweep_path, "sweep JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (dof->parsed()) return cmd_dof(config_path);
        if (plan->parsed()) return cmd_plan(config_path, seed, verify);
        if (simulate->parsed()) return cmd_simulate(config_path, snr_lo, snr_hi, seed_count);
        if (sweep->parsed()) return cmd_sweep(sweep_path);
    } catch (const mwrc::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const mwrc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return 0;
}
