#ifndef RICBOUND_JET_HPP
#define RICBOUND_JET_HPP

#include <Eigen/Dense>
#include <vector>

namespace ricbound {

/// Pointwise curvature data: the Ricci endomorphism and its covariant
/// derivatives in an orthonormal frame, plus the derived scalars.
///
/// grad_ric[k] is the derivative of Ric along the k-th frame vector;
/// dR_k = tr(grad_ric[k]).
struct PointJet {
    int n = 0;
    Eigen::MatrixXd ric;
    std::vector<Eigen::MatrixXd> grad_ric;

    Eigen::VectorXd dR;
    double grad_ric_norm_sq = 0.0;
    double dR_norm_sq = 0.0;

    PointJet(Eigen::MatrixXd ric_in, std::vector<Eigen::MatrixXd> grad_in);

    double scalar_curvature() const { return ric.trace(); }
    bool is_einstein(double tol = 1e-14) const;
};

} // namespace ricbound

#endif
