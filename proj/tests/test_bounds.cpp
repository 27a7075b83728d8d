#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwrc/bounds.hpp"
#include "mwrc/config.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace mwrc;

namespace {

NetworkConfig make(std::vector<std::vector<int>> clusters, int n) {
    NetworkConfig cfg;
    cfg.clusters = std::move(clusters);
    cfg.relay_antennas = n;
    return cfg;
}

}  // namespace

TEST_CASE("three-term bound on the running example") {
    const auto b = dof_upper_bound(make({{3, 2}, {2, 2}}, 3));
    CHECK(b.term_sum_all == 9);
    CHECK(b.term_weak_users == 8);
    CHECK(b.term_relay == 6);
    CHECK(b.bound == 6);
}

TEST_CASE("bound matches the single-cluster and multi-pair special cases") {
    // Y channel with three 4-antenna users and a 3-antenna relay.
    const auto y = dof_upper_bound(make({{4, 4, 4}}, 3));
    CHECK(y.bound == 6);

    // Three two-user clusters, all M=2, N=3.
    const auto pairs = dof_upper_bound(make({{2, 2}, {2, 2}, {2, 2}}, 3));
    CHECK(pairs.term_sum_all == 12);
    CHECK(pairs.term_weak_users == 12);
    CHECK(pairs.bound == 6);
}

TEST_CASE("per-cluster cut-set caps") {
    const auto caps = cutset_cluster_bounds(make({{4, 3, 3}}, 10), 0);
    REQUIRE(caps.size() == 3);
    CHECK(caps[0].second == 4);
    CHECK(caps[1].second == 3);
    CHECK(caps[2].second == 3);

    const auto tight = cutset_cluster_bounds(make({{5, 1}}, 1), 0);
    CHECK(tight[0].second == 1);
    CHECK(tight[1].second == 1);

    const auto pair = cutset_cluster_bounds(make({{2, 2}}, 10), 0);
    CHECK(pair[0].second + pair[1].second == 4);
}

TEST_CASE("cap sums reproduce the cut-set terms when the relay is large") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> antennas(1, 8), sizes(2, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> cluster(sizes(rng));
        for (auto& m : cluster) m = antennas(rng);
        std::sort(cluster.begin(), cluster.end(), std::greater<>());
        const auto cfg = make({cluster}, 1000);
        const auto caps = cutset_cluster_bounds(cfg, 0);
        long long total = 0;
        for (const auto& [user, cap] : caps) total += cap;
        const auto b = dof_upper_bound(cfg);
        CHECK(total == std::min(b.term_sum_all, b.term_weak_users));
    }
}

TEST_CASE("bound is monotone and scales linearly") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> antennas(1, 6), sizes(2, 4), lengths(1, 3);
    for (int trial = 0; trial < 200; ++trial) {
        NetworkConfig cfg;
        cfg.relay_antennas = antennas(rng);
        const int L = lengths(rng);
        for (int l = 0; l < L; ++l) {
            std::vector<int> cluster(sizes(rng));
            for (auto& m : cluster) m = antennas(rng);
            std::sort(cluster.begin(), cluster.end(), std::greater<>());
            cfg.clusters.push_back(cluster);
        }
        const auto base = dof_upper_bound(cfg);

        auto grown = cfg;
        grown.clusters[0][0] += 1;
        CHECK(dof_upper_bound(grown).bound >= base.bound);

        auto more_relay = cfg;
        more_relay.relay_antennas += 1;
        CHECK(dof_upper_bound(more_relay).bound >= base.bound);

        auto doubled = cfg;
        doubled.relay_antennas *= 2;
        for (auto& cluster : doubled.clusters)
            for (auto& m : cluster) m *= 2;
        CHECK(dof_upper_bound(doubled).bound == 2 * base.bound);
    }
}

TEST_CASE("two-way relay special case of the bound") {
    for (int m1 = 1; m1 <= 6; ++m1)
        for (int m2 = 1; m2 <= m1; ++m2)
            for (int n = 1; n <= 12; ++n) {
                const auto b = dof_upper_bound(make({{m1, m2}}, n));
                CHECK(b.bound == std::min<long long>({m1 + m2, 2 * m2, 2 * n}));
            }
}

TEST_CASE("genie schedule sizes and partition") {
    const auto two = genie_schedule(2);
    REQUIRE(two.decodable.size() == 1);
    CHECK(two.decodable[0] == MessageId{0, 0, 1});
    CHECK(two.steps.size() == 1);
    CHECK(two.steps[0].genie_messages.empty());

    const auto three = genie_schedule(3);
    CHECK(three.decodable.size() == 3);

    for (int users = 2; users <= 12; ++users) {
        const auto sched = genie_schedule(users);
        CHECK(static_cast<int>(sched.decodable.size()) == users * (users - 1) / 2);

        // Decodable and mirror sets partition the ordered-pair universe.
        std::set<std::pair<int, int>> seen;
        for (const auto& msg : sched.decodable) {
            CHECK(msg.dest < msg.src);
            seen.insert({msg.dest, msg.src});
        }
        for (const auto& msg : sched.mirror()) {
            CHECK(msg.dest > msg.src);
            CHECK(!seen.count({msg.dest, msg.src}));
            seen.insert({msg.dest, msg.src});
        }
        CHECK(static_cast<int>(seen.size()) == users * (users - 1));
    }
}

TEST_CASE("genie step k hands over exactly the lower-triangle column") {
    const auto sched = genie_schedule(9);
    CHECK(sched.decodable.size() == 36);
    for (const auto& step : sched.steps) {
        if (step.step == 0) CHECK(step.genie_messages.empty());
        for (const auto& msg : step.genie_messages) {
            CHECK(msg.src == step.step);
            CHECK(msg.dest > step.step);
        }
        for (const auto& msg : step.decoded) {
            CHECK(msg.dest == step.step);
            CHECK(msg.src > step.step);
        }
    }
}
