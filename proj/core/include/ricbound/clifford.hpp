#ifndef RICBOUND_CLIFFORD_HPP
#define RICBOUND_CLIFFORD_HPP

#include <Eigen/Dense>
#include <vector>

namespace ricbound {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;

/// Endomorphism of the spinor space attached to an n-dimensional frame.
struct SpinorEndo {
    int n = 0;
    MatrixC mat;
};

/// Irreducible complex Clifford module for dimension n.
///
/// Generators satisfy G_i G_j + G_j G_i = -2 delta_ij Id and are
/// skew-Hermitian; entries are exact 0, +-1, +-i by construction.
class CliffordRep {
public:
    static constexpr int min_dim = 2;
    static constexpr int max_dim = 12;

    explicit CliffordRep(int n);

    int dim() const { return n_; }
    int spinor_dim() const { return spinor_dim_; }
    const MatrixC& generator(int k) const { return generators_.at(k); }
    const std::vector<MatrixC>& generators() const { return generators_; }

private:
    int n_;
    int spinor_dim_;
    std::vector<MatrixC> generators_;
};

/// Clifford multiplication by the tangent vector v, i.e. sum_k v_k G_k.
SpinorEndo vector_mult(const CliffordRep& rep, const Eigen::VectorXd& v);

/// Totally antisymmetric 3-tensor, stored as theta[j](k, l).
using ThreeForm = std::vector<Eigen::MatrixXd>;

/// Clifford multiplication by a real 3-form: sum_{j<k<l} theta_jkl G_j G_k G_l.
/// theta must be totally antisymmetric; the result is Hermitian.
SpinorEndo form_mult3(const CliffordRep& rep, const ThreeForm& theta);

/// sum_k G_k * vector_mult(S e_k) for symmetric S; equals -tr(S) Id.
SpinorEndo sym_trace_contract(const CliffordRep& rep, const Eigen::MatrixXd& s);

} // namespace ricbound

#endif
