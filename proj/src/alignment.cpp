#include "mwrc/alignment.hpp"

#include "mwrc/channel.hpp"
#include "mwrc/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <string>

namespace mwrc {

namespace {

constexpr double kNullSpaceRelTol = 1e-9;
constexpr double kRelayComponentTol = 1e-6;

void require_full_rank(const Eigen::MatrixXcd& m, const char* name) {
    const int want = static_cast<int>(std::min(m.rows(), m.cols()));
    if (numerical_rank(m) != want)
        throw DegenerateChannelError(std::string("shared_subspace: ") + name +
                                     " is numerically rank-deficient");
}

double triple_residual(const Eigen::MatrixXcd& h1, const Eigen::MatrixXcd& h2,
                       const Eigen::VectorXcd& q, const Eigen::VectorXcd& u,
                       const Eigen::VectorXcd& w) {
    const double qn = q.norm();
    const double r1 = (h1 * u - q).norm();
    const double r2 = (h2 * w - q).norm();
    const double r3 = (h1 * u - h2 * w).norm();
    return std::max({r1, r2, r3}) / qn;
}

/// Both maps have full row rank: pick the first d standard basis vectors of
/// relay space as targets and solve the (exactly consistent) systems.
SharedSubspace solve_by_targets(const Eigen::MatrixXcd& h1, const Eigen::MatrixXcd& h2, int d) {
    const auto p = h1.rows();
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod1(h1), cod2(h2);

    SharedSubspace out;
    for (int i = 0; i < d; ++i) {
        Eigen::VectorXcd target = Eigen::VectorXcd::Zero(p);
        target(i) = 1.0;
        Eigen::VectorXcd u = cod1.solve(target);
        Eigen::VectorXcd w = cod2.solve(target);
        out.residual = std::max(out.residual, triple_residual(h1, h2, target, u, w));
        out.q.push_back(std::move(target));
        out.u.push_back(std::move(u));
        out.w.push_back(std::move(w));
    }
    return out;
}

/// General case via the stacked system [I H1 0; I 0 H2] [v; u; w] = 0,
/// whose solutions satisfy H1 u = H2 w = -v.
SharedSubspace solve_by_null_space(const Eigen::MatrixXcd& h1, const Eigen::MatrixXcd& h2, int d,
                                   int dim_limit) {
    const auto p = h1.rows();
    const auto q1 = h1.cols();
    const auto q2 = h2.cols();

    Eigen::MatrixXcd stacked = Eigen::MatrixXcd::Zero(2 * p, p + q1 + q2);
    stacked.block(0, 0, p, p) = Eigen::MatrixXcd::Identity(p, p);
    stacked.block(p, 0, p, p) = Eigen::MatrixXcd::Identity(p, p);
    stacked.block(0, p, p, q1) = h1;
    stacked.block(p, p + q1, p, q2) = h2;

    Eigen::BDCSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? kNullSpaceRelTol * sv(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    const int null_dim = static_cast<int>(p + q1 + q2) - rank;
    if (null_dim < d)
        throw DegenerateChannelError("shared_subspace: stacked null space smaller than requested");

    const Eigen::MatrixXcd null_basis = svd.matrixV().rightCols(null_dim);

    // The SVD basis mixes the spurious null vectors (v = 0, u in null(H1))
    // with the useful ones, so rotate: keep the d combinations with the
    // largest relay-space component.
    const Eigen::MatrixXcd v_block = null_basis.topRows(p);
    Eigen::BDCSVD<Eigen::MatrixXcd> vsvd(v_block, Eigen::ComputeFullV);
    int usable = 0;
    for (int i = 0; i < vsvd.singularValues().size(); ++i)
        if (vsvd.singularValues()(i) > kRelayComponentTol) ++usable;
    if (usable < d)
        throw DegenerateChannelError("shared_subspace: only " + std::to_string(usable) +
                                     " nonzero relay directions survive (requested " +
                                     std::to_string(d) + "); shared dimension limit is " +
                                     std::to_string(dim_limit));

    SharedSubspace out;
    for (int i = 0; i < d; ++i) {
        Eigen::VectorXcd z = null_basis * vsvd.matrixV().col(i);
        Eigen::VectorXcd v = z.head(p);
        const double scale = 1.0 / v.norm();
        // The stacked system encodes v + H1 u = 0; flip so q = H1 u.
        Eigen::VectorXcd q = -v * scale;
        Eigen::VectorXcd u = z.segment(p, q1) * scale;
        Eigen::VectorXcd w = z.tail(q2) * scale;
        out.residual = std::max(out.residual, triple_residual(h1, h2, q, u, w));
        out.q.push_back(std::move(q));
        out.u.push_back(std::move(u));
        out.w.push_back(std::move(w));
    }
    return out;
}

}  // namespace

int shared_dim(int p, int q1, int q2) {
    if (q1 < q2) std::swap(q1, q2);
    const int dim = std::min({p, q1, q2, q1 + q2 - p});
    return std::max(0, dim);
}

SharedSubspace shared_subspace(const Eigen::MatrixXcd& h1, const Eigen::MatrixXcd& h2, int d) {
    if (h1.rows() != h2.rows())
        throw DimensionError("shared_subspace: H1 and H2 must map into the same space");
    const int p = static_cast<int>(h1.rows());
    const int q1 = static_cast<int>(h1.cols());
    const int q2 = static_cast<int>(h2.cols());

    const int limit = shared_dim(p, q1, q2);
    if (d < 0 || d > limit)
        throw DimensionError("shared_subspace: requested " + std::to_string(d) +
                             " dimensions, shared_dim(" + std::to_string(p) + "," +
                             std::to_string(q1) + "," + std::to_string(q2) + ") = " +
                             std::to_string(limit));
    if (d == 0) return {};

    require_full_rank(h1, "H1");
    require_full_rank(h2, "H2");

    if (q1 >= p && q2 >= p) return solve_by_targets(h1, h2, d);
    return solve_by_null_space(h1, h2, d, limit);
}

ReceiverFilters receiver_filters(const Eigen::MatrixXcd& g1, const Eigen::MatrixXcd& g2, int d) {
    // u^T G = g^T is G^T u = g: the transpose-dual alignment problem.
    SharedSubspace dual = shared_subspace(g1.transpose(), g2.transpose(), d);
    ReceiverFilters out;
    out.u1 = std::move(dual.u);
    out.u2 = std::move(dual.w);
    out.g = std::move(dual.q);
    out.residual = dual.residual;
    return out;
}

int numerical_shared_dim(const Eigen::MatrixXcd& h1, const Eigen::MatrixXcd& h2, double rel_tol) {
    Eigen::MatrixXcd joined(h1.rows(), h1.cols() + h2.cols());
    joined << h1, h2;
    return numerical_rank(h1, rel_tol) + numerical_rank(h2, rel_tol) -
           numerical_rank(joined, rel_tol);
}

}  // namespace mwrc
