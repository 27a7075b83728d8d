#include "mwrc/channel.hpp"

#include "mwrc/errors.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <random>

namespace mwrc {

namespace {

constexpr int kMaxResampleAttempts = 16;
constexpr double kRankRelTol = 1e-9;

Eigen::MatrixXcd draw_matrix(int rows, int cols, std::mt19937_64& rng) {
    // Unit-variance circularly symmetric complex Gaussian entries.
    std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = {gauss(rng), gauss(rng)};
    return m;
}

bool full_rank(const Eigen::MatrixXcd& m) {
    const int want = static_cast<int>(std::min(m.rows(), m.cols()));
    return numerical_rank(m, kRankRelTol) == want;
}

}  // namespace

int numerical_rank(const Eigen::MatrixXcd& m, double rel_tol) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    const double cutoff = rel_tol * sv(0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

ChannelSet sample_channels(const NetworkConfig& config, std::uint64_t seed) {
    validate(config);

    for (int attempt = 0; attempt < kMaxResampleAttempts; ++attempt) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(attempt)};
        std::mt19937_64 rng(seq);

        ChannelSet set;
        set.seed = seed;
        set.uplink.resize(config.num_clusters());
        set.downlink.resize(config.num_clusters());

        bool ok = true;
        for (int l = 0; l < config.num_clusters(); ++l) {
            for (int k = 0; k < config.users_in(l); ++k) {
                const int m = config.antennas(l, k);
                Eigen::MatrixXcd up = draw_matrix(config.relay_antennas, m, rng);
                Eigen::MatrixXcd down = draw_matrix(m, config.relay_antennas, rng);
                ok = ok && full_rank(up) && full_rank(down);
                set.uplink[l].push_back(std::move(up));
                set.downlink[l].push_back(std::move(down));
            }
        }
        if (ok) return set;
    }
    throw DegenerateChannelError("sample_channels: rank check failed 16 times; RNG degenerate");
}

}  // namespace mwrc
