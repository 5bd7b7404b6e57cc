#ifndef RICBOUND_BOUNDS_HPP
#define RICBOUND_BOUNDS_HPP

#include "ricbound/manifold.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ricbound {

/// Scalar inputs of the eigenvalue bounds. All curvature quantities share
/// one inverse-length-squared unit; the engine is unit-agnostic.
struct BoundInputs {
    int n = 0;
    double r_min = 0.0;
    double r_max = 0.0;
    double kappa = 0.0;
    double ric_sq_min = 0.0;
    double traceless_sq_max = 0.0;
    double epsilon = 0.0;
    double tau = 0.0;
    bool theta_vanishes = false;
    bool kahler = false;

    static BoundInputs from(const GeomInvariants& inv, bool kahler);

    double r_star() const { return kappa <= 0.0 ? r_min : r_max; }
    int complex_dim() const { return n / 2; }
};

/// c0 + c1 t + c2 t^2.
struct Quadratic {
    double c0 = 0.0, c1 = 0.0, c2 = 0.0;
    double operator()(double t) const { return c0 + t * (c1 + t * c2); }
    double derivative(double t) const { return c1 + 2.0 * c2 * t; }
};

Quadratic alpha_poly(const BoundInputs& in);
Quadratic beta_poly(const BoundInputs& in);
Quadratic gamma_poly(const BoundInputs& in);

struct AlphaBetaGamma {
    double alpha = 0.0, beta = 0.0, gamma = 0.0;
};

/// Evaluate the three coefficient functions at t >= 0.
AlphaBetaGamma alpha_beta_gamma(const BoundInputs& in, double t);

enum class Theorem { Friedrich, Kaehler, Thm41, Thm42, Cor43 };
const char* theorem_name(Theorem t);

struct BoundResult {
    Theorem theorem = Theorem::Friedrich;
    bool applicable = false;
    double lambda_sq = 0.0; // valid when applicable
    std::optional<double> t_opt;
    std::string note;
};

/// lambda^2 >= n R_min / (4(n-1)), for R_min > 0.
BoundResult friedrich(const BoundInputs& in);

/// Kaehler refinement, parity-dependent coefficient in the complex dimension.
BoundResult kaehler_bound(const BoundInputs& in);

/// Parameterized bound valid for nonnegative eigenvalues:
/// lambda >= max over feasible t of (sqrt(alpha beta + gamma^2) + gamma)/alpha.
BoundResult bound_thm41(const BoundInputs& in);

/// lambda^2 >= max over t >= 0 of beta(t)/alpha(t); needs Theta = 0.
BoundResult bound_thm42(const BoundInputs& in);

/// Closed-form maximization of beta/alpha under R_min = 0.
BoundResult bound_cor43(const BoundInputs& in);

/// The a, b, c constants of the closed-form bound.
struct Cor43Constants {
    double a = 0.0, b = 0.0, c = 0.0;
};
Cor43Constants cor43_constants(const BoundInputs& in);

enum class Verdict { Holds, Fails, HypothesisNotMet };
const char* verdict_name(Verdict v);

struct ConditionCheck {
    std::string id;
    Verdict verdict = Verdict::HypothesisNotMet;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct VanishingReport {
    ConditionCheck general;    // R_min <= 0 criterion
    ConditionCheck constant_r; // constant scalar curvature specialization
    ConditionCheck zero_r_min; // R_min = 0, |Ric|_min > 0
    bool no_harmonic_spinors = false;
};
VanishingReport vanishing_check(const BoundInputs& in);

struct ImprovementReport {
    ConditionCheck condition;                  // kappa-sign dependent criterion
    std::optional<ConditionCheck> constant_r;  // constant-R simplification
};
ImprovementReport improvement_check(const BoundInputs& in);

struct BoundReport {
    BoundInputs inputs;
    std::vector<BoundResult> results;
    VanishingReport vanishing;
    ImprovementReport improvement;
    std::optional<Theorem> best;
    double best_lambda_sq = 0.0;
};
BoundReport best_bound(const BoundInputs& in);

} // namespace ricbound

#endif
