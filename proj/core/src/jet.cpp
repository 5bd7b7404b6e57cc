#include "ricbound/jet.hpp"

#include <stdexcept>

namespace ricbound {

PointJet::PointJet(Eigen::MatrixXd ric_in, std::vector<Eigen::MatrixXd> grad_in)
    : n(static_cast<int>(ric_in.rows())),
      ric(std::move(ric_in)),
      grad_ric(std::move(grad_in)) {
    if (ric.rows() != ric.cols())
        throw std::invalid_argument("PointJet: ric must be square");
    if (!ric.isApprox(ric.transpose(), 1e-12))
        throw std::invalid_argument("PointJet: ric must be symmetric");
    if (static_cast<int>(grad_ric.size()) != n)
        throw std::invalid_argument("PointJet: expected one derivative per frame vector");
    dR.resize(n);
    for (int k = 0; k < n; ++k) {
        const auto& g = grad_ric[k];
        if (g.rows() != n || g.cols() != n)
            throw std::invalid_argument("PointJet: derivative dimension mismatch");
        if (!g.isApprox(g.transpose(), 1e-12))
            throw std::invalid_argument("PointJet: derivatives must be symmetric");
        dR[k] = g.trace();
        grad_ric_norm_sq += g.squaredNorm();
    }
    dR_norm_sq = dR.squaredNorm();
}

bool PointJet::is_einstein(double tol) const {
    const double lambda = ric.trace() / n;
    if ((ric - lambda * Eigen::MatrixXd::Identity(n, n)).norm() > tol) return false;
    for (const auto& g : grad_ric)
        if (g.norm() > tol) return false;
    return true;
}

} // namespace ricbound
