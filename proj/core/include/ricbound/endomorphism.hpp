#ifndef RICBOUND_ENDOMORPHISM_HPP
#define RICBOUND_ENDOMORPHISM_HPP

#include "ricbound/clifford.hpp"
#include "ricbound/jet.hpp"

namespace ricbound {

/// Skew-Hermitian endomorphism A_x built from the Ricci derivatives:
/// (1/4) sum_k ( (grad_k Ric)(x) . X^k  -  X^k . (grad_k Ric)(x) ).
SpinorEndo build_a(const CliffordRep& rep, const PointJet& jet,
                   const Eigen::VectorXd& x);

/// sum_k G_k A_{e_k}; equals -(1/4) vector_mult(dR).
SpinorEndo trace_a(const CliffordRep& rep, const PointJet& jet);

/// E = -sum_k A_{e_k} A_{e_k}; Hermitian and positive semidefinite.
SpinorEndo build_e(const CliffordRep& rep, const PointJet& jet);

/// E through the commutator expansion:
/// (|grad Ric|^2 / 4 - |dR|^2 / 16) Id
///   + (1/8) sum_{j,k,l} ([grad_j Ric, grad_k Ric] e_l) . G_j G_k G_l.
SpinorEndo build_e_formula(const CliffordRep& rep, const PointJet& jet);

/// T = sum_k ( Ric(e_k) . A_{e_k} + A_{e_k} . Ric(e_k) ); Hermitian.
SpinorEndo build_t(const CliffordRep& rep, const PointJet& jet);

/// T through the commutator contraction:
/// (1/2) sum_{k,l} ([grad_k Ric, Ric] e_l) . G_k G_l.
SpinorEndo build_t_from_commutators(const CliffordRep& rep, const PointJet& jet);

/// The 3-form whose Clifford action equals T:
/// theta(X,Y,Z) = g([grad_X Ric, Ric] Y, Z) + g([grad_Z Ric, Ric] X, Y)
///              + g([grad_Y Ric, Ric] Z, X).
ThreeForm build_theta(const PointJet& jet);

struct SpectralExtremes {
    double epsilon = 0.0; // max eigenvalue of E over all jets
    double tau = 0.0;     // min eigenvalue of T over all jets
};

SpectralExtremes epsilon_tau(const CliffordRep& rep,
                             const std::vector<PointJet>& jets);

} // namespace ricbound

#endif
