#include "ricbound/endomorphism.hpp"

#include <stdexcept>

namespace ricbound {
namespace {

void require_match(const CliffordRep& rep, const PointJet& jet) {
    if (rep.dim() != jet.n)
        throw std::invalid_argument("endomorphism: rep/jet dimension mismatch");
}

} // namespace

SpinorEndo build_a(const CliffordRep& rep, const PointJet& jet,
                   const Eigen::VectorXd& x) {
    require_match(rep, jet);
    if (x.size() != jet.n)
        throw std::invalid_argument("build_a: direction dimension mismatch");
    const int d = rep.spinor_dim();
    MatrixC m = MatrixC::Zero(d, d);
    for (int k = 0; k < jet.n; ++k) {
        const Eigen::VectorXd w = jet.grad_ric[k] * x;
        if (w.isZero(0.0)) continue;
        const MatrixC v = vector_mult(rep, w).mat;
        m += v * rep.generator(k) - rep.generator(k) * v;
    }
    m *= 0.25;
    return {jet.n, std::move(m)};
}

SpinorEndo trace_a(const CliffordRep& rep, const PointJet& jet) {
    require_match(rep, jet);
    const int d = rep.spinor_dim();
    MatrixC m = MatrixC::Zero(d, d);
    for (int k = 0; k < jet.n; ++k)
        m += rep.generator(k) *
             build_a(rep, jet, Eigen::VectorXd::Unit(jet.n, k)).mat;
    return {jet.n, std::move(m)};
}

SpinorEndo build_e(const CliffordRep& rep, const PointJet& jet) {
    require_match(rep, jet);
    const int d = rep.spinor_dim();
    MatrixC m = MatrixC::Zero(d, d);
    for (int k = 0; k < jet.n; ++k) {
        const MatrixC a = build_a(rep, jet, Eigen::VectorXd::Unit(jet.n, k)).mat;
        m -= a * a;
    }
    return {jet.n, std::move(m)};
}

SpinorEndo build_e_formula(const CliffordRep& rep, const PointJet& jet) {
    require_match(rep, jet);
    const int n = jet.n;
    const int d = rep.spinor_dim();
    const double scalar = 0.25 * jet.grad_ric_norm_sq - jet.dR_norm_sq / 16.0;
    MatrixC m = scalar * MatrixC::Identity(d, d);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (j == k) continue;
            const Eigen::MatrixXd comm =
                jet.grad_ric[j] * jet.grad_ric[k] - jet.grad_ric[k] * jet.grad_ric[j];
            if (comm.isZero(0.0)) continue;
            const MatrixC gjk = rep.generator(j) * rep.generator(k);
            for (int l = 0; l < n; ++l)
                m += 0.125 * vector_mult(rep, comm.col(l)).mat * gjk *
                     rep.generator(l);
        }
    return {n, std::move(m)};
}

SpinorEndo build_t(const CliffordRep& rep, const PointJet& jet) {
    require_match(rep, jet);
    const int d = rep.spinor_dim();
    MatrixC m = MatrixC::Zero(d, d);
    for (int k = 0; k < jet.n; ++k) {
        const MatrixC a = build_a(rep, jet, Eigen::VectorXd::Unit(jet.n, k)).mat;
        const MatrixC r = vector_mult(rep, jet.ric.col(k)).mat;
        m += r * a + a * r;
    }
    return {jet.n, std::move(m)};
}

SpinorEndo build_t_from_commutators(const CliffordRep& rep, const PointJet& jet) {
    require_match(rep, jet);
    const int n = jet.n;
    const int d = rep.spinor_dim();
    MatrixC m = MatrixC::Zero(d, d);
    for (int k = 0; k < n; ++k) {
        const Eigen::MatrixXd comm = jet.grad_ric[k] * jet.ric - jet.ric * jet.grad_ric[k];
        if (comm.isZero(0.0)) continue;
        for (int l = 0; l < n; ++l)
            m += 0.5 * vector_mult(rep, comm.col(l)).mat * rep.generator(k) *
                 rep.generator(l);
    }
    return {n, std::move(m)};
}

ThreeForm build_theta(const PointJet& jet) {
    const int n = jet.n;
    std::vector<Eigen::MatrixXd> comm(n);
    for (int k = 0; k < n; ++k)
        comm[k] = jet.grad_ric[k] * jet.ric - jet.ric * jet.grad_ric[k];
    ThreeForm theta(n, Eigen::MatrixXd::Zero(n, n));
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l)
                theta[j](k, l) = comm[j](l, k) + comm[l](k, j) + comm[k](j, l);
    return theta;
}

SpectralExtremes epsilon_tau(const CliffordRep& rep,
                             const std::vector<PointJet>& jets) {
    if (jets.empty())
        throw std::invalid_argument("epsilon_tau: empty jet list");
    SpectralExtremes out;
    bool first = true;
    for (const auto& jet : jets) {
        Eigen::SelfAdjointEigenSolver<MatrixC> es_e(build_e(rep, jet).mat,
                                                    Eigen::EigenvaluesOnly);
        Eigen::SelfAdjointEigenSolver<MatrixC> es_t(build_t(rep, jet).mat,
                                                    Eigen::EigenvaluesOnly);
        if (es_e.info() != Eigen::Success || es_t.info() != Eigen::Success)
            throw std::runtime_error("epsilon_tau: eigensolver failed to converge");
        const double e_max = es_e.eigenvalues().maxCoeff();
        const double t_min = es_t.eigenvalues().minCoeff();
        if (first) {
            out.epsilon = e_max;
            out.tau = t_min;
            first = false;
        } else {
            out.epsilon = std::max(out.epsilon, e_max);
            out.tau = std::min(out.tau, t_min);
        }
    }
    return out;
}

} // namespace ricbound
