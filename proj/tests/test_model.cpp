#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwrc/channel.hpp"
#include "mwrc/config.hpp"
#include "mwrc/errors.hpp"

#include <random>

using namespace mwrc;

namespace {

NetworkConfig make(std::vector<std::vector<int>> clusters, int n) {
    NetworkConfig cfg;
    cfg.clusters = std::move(clusters);
    cfg.relay_antennas = n;
    return cfg;
}

}  // namespace

TEST_CASE("validation rejects malformed configs") {
    CHECK_THROWS_AS(validate(make({}, 3)), ValidationError);
    CHECK_THROWS_AS(validate(make({{2}}, 3)), ValidationError);
    CHECK_THROWS_AS(validate(make({{2, 0}}, 3)), ValidationError);
    CHECK_THROWS_AS(validate(make({{2, 2}}, 0)), ValidationError);
    CHECK_NOTHROW(validate(make({{2, 2}}, 1)));
}

TEST_CASE("canonicalize sorts users and records the permutation") {
    const auto canonical = canonicalize(make({{2, 3}, {2, 2}}, 3));
    CHECK(canonical.config.clusters == std::vector<std::vector<int>>{{3, 2}, {2, 2}});
    CHECK(canonical.perm.cluster_map == std::vector<int>{0, 1});
    CHECK(canonical.perm.user_map[0] == std::vector<int>{1, 0});
}

TEST_CASE("catalog mode orders clusters, ties broken by the stronger user") {
    const auto canonical = canonicalize(make({{2, 2}, {3, 2}}, 3));
    CHECK(canonical.config.clusters == std::vector<std::vector<int>>{{3, 2}, {2, 2}});
    CHECK(canonical.perm.cluster_map == std::vector<int>{1, 0});
}

TEST_CASE("already canonical config maps to itself") {
    const auto canonical = canonicalize(make({{3, 2}, {2, 2}}, 3));
    CHECK(canonical.config.clusters == std::vector<std::vector<int>>{{3, 2}, {2, 2}});
    CHECK(canonical.perm.is_identity());
}

TEST_CASE("canonicalize is idempotent") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> antennas(1, 8), sizes(2, 4), lengths(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        NetworkConfig cfg;
        cfg.relay_antennas = antennas(rng);
        const int L = lengths(rng);
        for (int l = 0; l < L; ++l) {
            std::vector<int> cluster(sizes(rng));
            for (auto& m : cluster) m = antennas(rng);
            cfg.clusters.push_back(cluster);
        }
        const auto once = canonicalize(cfg);
        const auto twice = canonicalize(once.config);
        CHECK(once.config == twice.config);
        CHECK(twice.perm.is_identity());
    }
}

TEST_CASE("message universe size and ordering") {
    const auto one_pair = message_universe(make({{2, 2}}, 2));
    REQUIRE(one_pair.size() == 2);
    CHECK(one_pair[0] == MessageId{0, 0, 1});
    CHECK(one_pair[1] == MessageId{0, 1, 0});

    CHECK(message_universe(make({{2, 2}, {2, 2}}, 2)).size() == 4);
    CHECK(message_universe(make({{3, 3, 3}}, 2)).size() == 6);

    // K(K-1) per cluster for ragged shapes too.
    const auto ragged = message_universe(make({{2, 2, 2, 2}, {2, 2}}, 2));
    CHECK(ragged.size() == 4 * 3 + 2);
}

TEST_CASE("sampling is a pure function of config and seed") {
    const auto cfg = make({{2, 2}, {2, 2}}, 3);
    const auto a = sample_channels(cfg, 7);
    const auto b = sample_channels(cfg, 7);
    for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 2; ++k) {
            CHECK(a.uplink[l][k] == b.uplink[l][k]);
            CHECK(a.downlink[l][k] == b.downlink[l][k]);
        }
    const auto c = sample_channels(cfg, 8);
    CHECK(a.uplink[0][0] != c.uplink[0][0]);
}

TEST_CASE("sampled matrices have the contracted shapes") {
    const auto cfg = make({{3, 2}, {2, 2}}, 3);
    const auto channels = sample_channels(cfg, 1);
    CHECK(channels.uplink[0][1].rows() == 3);
    CHECK(channels.uplink[0][1].cols() == 2);
    CHECK(channels.downlink[0][0].rows() == 3);
    CHECK(channels.downlink[0][0].cols() == 3);
}

TEST_CASE("tall sampled matrices are full column rank across seeds") {
    const auto cfg = make({{3, 2}}, 4);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const auto channels = sample_channels(cfg, seed);
        CHECK(numerical_rank(channels.uplink[0][0]) == 3);
        CHECK(numerical_rank(channels.uplink[0][1]) == 2);
    }
}
