#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mwrc/alignment.hpp"
#include "mwrc/channel.hpp"
#include "mwrc/errors.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>

using namespace mwrc;

namespace {

Eigen::MatrixXcd gaussian(int rows, int cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, std::sqrt(0.5));
    Eigen::MatrixXcd m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = {g(rng), g(rng)};
    return m;
}

int rank_of(const std::vector<Eigen::VectorXcd>& vectors) {
    if (vectors.empty()) return 0;
    Eigen::MatrixXcd m(vectors[0].size(), vectors.size());
    for (std::size_t c = 0; c < vectors.size(); ++c) m.col(c) = vectors[c];
    return numerical_rank(m);
}

}  // namespace

TEST_CASE("shared_dim closed form") {
    CHECK(shared_dim(4, 3, 2) == 1);
    CHECK(shared_dim(3, 4, 2) == 2);
    CHECK(shared_dim(5, 2, 2) == 0);
    CHECK(shared_dim(2, 3, 3) == 2);
    CHECK(shared_dim(3, 2, 4) == shared_dim(3, 4, 2));  // symmetric in q1, q2
}

TEST_CASE("shared_dim agrees with the column-space intersection oracle") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> dim(1, 12);
    for (int trial = 0; trial < 300; ++trial) {
        const int p = dim(rng), q1 = dim(rng), q2 = dim(rng);
        const auto h1 = gaussian(p, q1, 1000 + trial);
        const auto h2 = gaussian(p, q2, 2000 + trial);
        CHECK(numerical_shared_dim(h1, h2) == shared_dim(p, q1, q2));
    }
}

TEST_CASE("both-users-exceed-relay cases agree with the oracle too") {
    for (int trial = 0; trial < 100; ++trial) {
        const auto h1 = gaussian(2, 3, 91 + trial);
        const auto h2 = gaussian(2, 3, 391 + trial);
        CHECK(numerical_shared_dim(h1, h2) == 2);
    }
}

TEST_CASE("stacked null-space construction satisfies the alignment identities") {
    const auto h1 = gaussian(4, 3, 11);
    const auto h2 = gaussian(4, 2, 12);
    const auto ss = shared_subspace(h1, h2, 1);
    REQUIRE(ss.dimension() == 1);
    CHECK(ss.residual <= 1e-8);
    CHECK((h1 * ss.u[0] - ss.q[0]).norm() <= 1e-8);
    CHECK((h2 * ss.w[0] - ss.q[0]).norm() <= 1e-8);
    CHECK(ss.q[0].norm() > 0.0);
    CHECK(rank_of(ss.q) == 1);
}

TEST_CASE("identical identity maps share the standard basis") {
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(3, 3);
    const auto ss = shared_subspace(eye, eye, 3);
    REQUIRE(ss.dimension() == 3);
    for (int i = 0; i < 3; ++i) {
        Eigen::VectorXcd basis = Eigen::VectorXcd::Zero(3);
        basis(i) = 1.0;
        CHECK((ss.q[i] - basis).norm() <= 1e-12);
        CHECK((ss.u[i] - basis).norm() <= 1e-12);
        CHECK((ss.w[i] - basis).norm() <= 1e-12);
    }
}

TEST_CASE("condition-2 saturates the smaller user") {
    const auto h1 = gaussian(3, 4, 21);
    const auto h2 = gaussian(3, 2, 22);
    const auto ss = shared_subspace(h1, h2, 2);
    REQUIRE(ss.dimension() == 2);
    CHECK(ss.residual <= 1e-8);
    CHECK(rank_of(ss.w) == 2);  // {w_i} spans the full q2 space
    CHECK(rank_of(ss.u) == 2);
    CHECK(rank_of(ss.q) == 2);
}

TEST_CASE("requesting more than the shared dimension is a dimension error") {
    const auto h1 = gaussian(4, 3, 31);
    const auto h2 = gaussian(4, 2, 32);
    CHECK_THROWS_AS(shared_subspace(h1, h2, 2), DimensionError);
}

TEST_CASE("rank-deficient inputs are rejected") {
    Eigen::MatrixXcd h1 = gaussian(4, 3, 41);
    h1.col(2) = h1.col(0) + h1.col(1);
    const auto h2 = gaussian(4, 3, 42);
    CHECK_THROWS_AS(shared_subspace(h1, h2, 1), DegenerateChannelError);
}

TEST_CASE("returned directions are independent with nonzero norm across seeds") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> dim(1, 9);
    int exercised = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int p = dim(rng), q1 = dim(rng), q2 = dim(rng);
        const int d = shared_dim(p, q1, q2);
        if (d == 0) continue;
        ++exercised;
        const auto ss =
            shared_subspace(gaussian(p, q1, 5000 + trial), gaussian(p, q2, 6000 + trial), d);
        CHECK(ss.residual <= 1e-8);
        CHECK(rank_of(ss.q) == d);
        CHECK(rank_of(ss.u) == d);
        CHECK(rank_of(ss.w) == d);
        for (const auto& q : ss.q) CHECK(q.norm() > 1e-9);
    }
    CHECK(exercised > 100);
}

TEST_CASE("receiver filters satisfy the effective-row identity") {
    // Downlink shapes of a symmetric 2x2 network with M=3, N=4.
    const auto g1 = gaussian(3, 4, 51);
    const auto g2 = gaussian(3, 4, 52);
    const int d = shared_dim(4, 3, 3);
    REQUIRE(d == 2);
    const auto filters = receiver_filters(g1, g2, d);
    REQUIRE(filters.dimension() == 2);
    CHECK(filters.residual <= 1e-8);
    for (int i = 0; i < d; ++i) {
        CHECK((g1.transpose() * filters.u1[i] - filters.g[i]).norm() <= 1e-8);
        CHECK((g2.transpose() * filters.u2[i] - filters.g[i]).norm() <= 1e-8);
    }
    CHECK(rank_of(filters.g) == d);
}

TEST_CASE("receiver filters match the transpose-dual construction") {
    const auto g1 = gaussian(2, 5, 61);
    const auto g2 = gaussian(3, 5, 62);
    const int d = shared_dim(5, 2, 3);
    const auto filters = receiver_filters(g1, g2, d);
    const auto dual = shared_subspace(g1.transpose(), g2.transpose(), d);

    // Same span of common directions: concatenation adds no rank.
    Eigen::MatrixXcd joined(5, 2 * d);
    for (int i = 0; i < d; ++i) {
        joined.col(i) = filters.g[i];
        joined.col(d + i) = dual.q[i];
    }
    CHECK(numerical_rank(joined) == d);
}

TEST_CASE("identical downlink matrices admit a zero-residual solution") {
    const auto g = gaussian(3, 4, 71);
    const auto filters = receiver_filters(g, g, 2);
    CHECK(filters.residual <= 1e-8);
}

TEST_CASE("zero requested dimensions is a vacuous success") {
    const auto g1 = gaussian(3, 4, 81);
    const auto g2 = gaussian(3, 4, 82);
    const auto filters = receiver_filters(g1, g2, 0);
    CHECK(filters.dimension() == 0);
    CHECK(filters.residual == 0.0);
}
