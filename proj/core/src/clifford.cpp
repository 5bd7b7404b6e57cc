#include "ricbound/clifford.hpp"

#include <cmath>
#include <stdexcept>

namespace ricbound {
namespace {

MatrixC kron(const MatrixC& a, const MatrixC& b) {
    MatrixC out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

MatrixC pauli(int which) {
    const Complex i(0.0, 1.0);
    MatrixC m(2, 2);
    switch (which) {
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -i, i, 0; break;
    default: m << 1, 0, 0, -1; break;
    }
    return m;
}

// Hermitian gamma matrix: sigma3^{(slot-1)} (x) core (x) Id^(rest).
MatrixC tensor_chain(int half, int slot, const MatrixC& core) {
    MatrixC out = MatrixC::Identity(1, 1);
    for (int j = 0; j < half; ++j) {
        if (j < slot)
            out = kron(out, pauli(3));
        else if (j == slot)
            out = kron(out, core);
        else
            out = kron(out, MatrixC::Identity(2, 2));
    }
    return out;
}

} // namespace

CliffordRep::CliffordRep(int n) : n_(n) {
    if (n < min_dim || n > max_dim)
        throw std::invalid_argument("CliffordRep: dimension must be in [2, 12]");
    const int half = n / 2;
    spinor_dim_ = 1 << half;
    generators_.reserve(n);
    const Complex i(0.0, 1.0);
    for (int k = 0; k < 2 * half; ++k)
        generators_.push_back(i * tensor_chain(half, k / 2, pauli(1 + k % 2)));
    if (n % 2 == 1) {
        // Volume element of the even part: sigma3 in every slot.
        MatrixC vol = MatrixC::Identity(1, 1);
        for (int j = 0; j < half; ++j) vol = kron(vol, pauli(3));
        generators_.push_back(i * vol);
    }
}

SpinorEndo vector_mult(const CliffordRep& rep, const Eigen::VectorXd& v) {
    if (v.size() != rep.dim())
        throw std::invalid_argument("vector_mult: dimension mismatch");
    if (!v.allFinite())
        throw std::invalid_argument("vector_mult: non-finite vector");
    MatrixC m = MatrixC::Zero(rep.spinor_dim(), rep.spinor_dim());
    for (int k = 0; k < rep.dim(); ++k)
        if (v[k] != 0.0) m += v[k] * rep.generator(k);
    return {rep.dim(), std::move(m)};
}

SpinorEndo form_mult3(const CliffordRep& rep, const ThreeForm& theta) {
    const int n = rep.dim();
    if (static_cast<int>(theta.size()) != n)
        throw std::invalid_argument("form_mult3: dimension mismatch");
    for (const auto& slab : theta)
        if (slab.rows() != n || slab.cols() != n)
            throw std::invalid_argument("form_mult3: dimension mismatch");
    const double scale = [&] {
        double s = 0.0;
        for (const auto& slab : theta) s = std::max(s, slab.cwiseAbs().maxCoeff());
        return std::max(1.0, s);
    }();
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                const double t = theta[j](k, l);
                if (std::abs(t + theta[k](j, l)) > 1e-12 * scale ||
                    std::abs(t + theta[j](l, k)) > 1e-12 * scale)
                    throw std::invalid_argument(
                        "form_mult3: coefficients are not totally antisymmetric");
            }
    MatrixC m = MatrixC::Zero(rep.spinor_dim(), rep.spinor_dim());
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k)
            for (int l = k + 1; l < n; ++l)
                if (theta[j](k, l) != 0.0)
                    m += theta[j](k, l) * rep.generator(j) * rep.generator(k) *
                         rep.generator(l);
    return {n, std::move(m)};
}

SpinorEndo sym_trace_contract(const CliffordRep& rep, const Eigen::MatrixXd& s) {
    const int n = rep.dim();
    if (s.rows() != n || s.cols() != n)
        throw std::invalid_argument("sym_trace_contract: dimension mismatch");
    if (!s.isApprox(s.transpose(), 1e-12))
        throw std::invalid_argument("sym_trace_contract: matrix is not symmetric");
    MatrixC m = MatrixC::Zero(rep.spinor_dim(), rep.spinor_dim());
    for (int k = 0; k < n; ++k)
        m += rep.generator(k) * vector_mult(rep, s.col(k)).mat;
    return {n, std::move(m)};
}

} // namespace ricbound
