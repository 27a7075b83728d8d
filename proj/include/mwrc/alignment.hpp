#pragma once

#include <Eigen/Dense>

#include <vector>

namespace mwrc {

/// Dimension of the generic intersection of the column spaces of a p x q1 and
/// a p x q2 full-rank matrix: max(0, min(p, q1, q2, q1 + q2 - p)). Symmetric
/// in q1, q2.
int shared_dim(int p, int q1, int q2);

/// d aligned directions q_i in relay space together with preimages
/// u_i, w_i such that H1 u_i = H2 w_i = q_i.
struct SharedSubspace {
    std::vector<Eigen::VectorXcd> q;  // aligned directions, unit norm, length p
    std::vector<Eigen::VectorXcd> u;  // preimages under H1, length q1
    std::vector<Eigen::VectorXcd> w;  // preimages under H2, length q2
    double residual = 0.0;            // max_i ||H_j x_i - q_i|| / ||q_i||

    int dimension() const { return static_cast<int>(q.size()); }
};

/// Constructs d shared directions for H1 (p x q1) and H2 (p x q2).
///
/// When both q1, q2 >= p the directions are fixed up front (the first d
/// standard basis vectors of relay space) and the preimages solved exactly,
/// since both maps have full row rank. Otherwise the directions come from
/// the null space of the stacked system [I H1 0; I 0 H2]: the null basis is
/// projected onto its relay-space block and the d dominant combinations are
/// kept, which discards the spurious null vectors with vanishing relay
/// component that appear once q1 > p.
///
/// Throws DimensionError if d > shared_dim(p, q1, q2), and
/// DegenerateChannelError if an input is numerically rank-deficient.
SharedSubspace shared_subspace(const Eigen::MatrixXcd& h1, const Eigen::MatrixXcd& h2, int d);

/// Receive-side dual of shared_subspace: row filters that make two users of
/// one cluster present identical effective downlink rows to the relay,
/// u1_i^T G1 = u2_i^T G2 = g_i^T.
struct ReceiverFilters {
    std::vector<Eigen::VectorXcd> u1;  // filters of user 1, length m1
    std::vector<Eigen::VectorXcd> u2;  // filters of user 2, length m2
    std::vector<Eigen::VectorXcd> g;   // common effective rows (as columns), length p
    double residual = 0.0;

    int dimension() const { return static_cast<int>(g.size()); }
};

/// G1 is m1 x p, G2 is m2 x p (user-side downlink matrices); requires
/// d <= shared_dim(p, m1, m2). Solved by applying shared_subspace to the
/// transposes.
ReceiverFilters receiver_filters(const Eigen::MatrixXcd& g1, const Eigen::MatrixXcd& g2, int d);

/// Oracle used by tests and the acceptance suite: numerical dimension of
/// col(H1) and col(H2)'s intersection via ranks of H1, H2 and [H1 H2].
int numerical_shared_dim(const Eigen::MatrixXcd& h1, const Eigen::MatrixXcd& h2,
                         double rel_tol = 1e-9);

}  // namespace mwrc
