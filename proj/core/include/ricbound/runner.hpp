#ifndef RICBOUND_RUNNER_HPP
#define RICBOUND_RUNNER_HPP

#include "ricbound/bounds.hpp"
#include "ricbound/config.hpp"

#include <random>
#include <string>
#include <vector>

namespace ricbound {

/// Full-report text for the configured manifold. Deterministic for a fixed
/// config and seed.
std::string render_report(const RunConfig& cfg);

/// CSV parameter sweep. Header:
/// param,R_min,R_max,kappa,ricSqMin,tracelessSqMax,epsilon,bound_friedrich,
/// bound_thm42,t_opt,vanishing_25
std::string render_sweep(const RunConfig& cfg);

struct IdentityCheck {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 1e-10;
    bool passed() const { return max_residual <= tolerance; }
};

struct VerifyResult {
    std::vector<IdentityCheck> checks;
    bool all_passed() const;
    std::string summary() const;
};

/// Runs the algebraic identity suite on the manifold's sampled jets plus
/// `random_jets` seeded random jets of the same dimension.
VerifyResult run_verify(const RunConfig& cfg, int random_jets = 100);

/// Random jet with symmetrized uniform [-1, 1] entries (test/verify helper).
PointJet random_jet(int n, std::mt19937& rng);

} // namespace ricbound

#endif
