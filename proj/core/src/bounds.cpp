#include "ricbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace ricbound {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double zero_tol(double reference) {
    return 1e-12 * std::max(1.0, std::abs(reference));
}

bool r_min_is_zero(const BoundInputs& in) {
    return std::abs(in.r_min) <= zero_tol(in.r_max);
}

bool constant_scalar_curvature(const BoundInputs& in) {
    return std::abs(in.r_max - in.r_min) <= zero_tol(in.r_max);
}

// Real roots of c0 + c1 t + c2 t^2, ascending; stable quadratic formula.
std::vector<double> real_roots(const Quadratic& q) {
    std::vector<double> roots;
    if (q.c2 == 0.0) {
        if (q.c1 != 0.0) roots.push_back(-q.c0 / q.c1);
        return roots;
    }
    const double disc = q.c1 * q.c1 - 4.0 * q.c2 * q.c0;
    if (disc < 0.0) return roots;
    const double s = std::sqrt(disc);
    const double qq = -0.5 * (q.c1 + std::copysign(s, q.c1));
    double r1 = qq / q.c2;
    double r2 = (qq != 0.0) ? q.c0 / qq : -q.c1 / (2.0 * q.c2);
    if (r1 > r2) std::swap(r1, r2);
    roots.push_back(r1);
    if (disc > 0.0) roots.push_back(r2);
    return roots;
}

struct RatioMax {
    bool feasible = false;
    double value = -kInf;
    double t = 0.0;
    bool at_infinity = false;
};

// Maximum of beta(t)/alpha(t) over { t >= 0 : beta(t) >= 0 }.
// Interior critical points solve beta' alpha - beta alpha' = 0, a quadratic
// (the cubic terms cancel); candidates are its nonnegative roots plus t = 0
// plus the endpoints of the feasible set.
RatioMax maximize_ratio(const BoundInputs& in) {
    const Quadratic a = alpha_poly(in);
    const Quadratic b = beta_poly(in);
    const double beta_scale =
        std::max({1.0, std::abs(b.c0), std::abs(b.c1), std::abs(b.c2)});

    std::vector<double> candidates{0.0};
    const Quadratic crit{b.c1 * a.c0 - a.c1 * b.c0,
                         2.0 * (b.c2 * a.c0 - a.c2 * b.c0),
                         b.c2 * a.c1 - a.c2 * b.c1};
    for (double t : real_roots(crit))
        if (t >= 0.0) candidates.push_back(t);
    for (double t : real_roots(b))
        if (t >= 0.0) candidates.push_back(t);

    RatioMax out;
    for (double t : candidates) {
        const double bt = b(t);
        if (bt < -1e-12 * beta_scale) continue;
        const double v = std::max(0.0, bt) / a(t);
        // Ties within 1e-12 relative keep the earlier (smaller) t, so that
        // Einstein-type inputs with ulp-level ripples in beta report t = 0.
        if (!out.feasible ||
            v > out.value + 1e-12 * std::max(1.0, std::abs(out.value))) {
            out.feasible = true;
            out.value = v;
            out.t = t;
        }
    }

    // With epsilon = 0 the feasible set can be a ray; compare against the
    // analytic t -> infinity limit of the ratio.
    if (b.c2 == 0.0 && b.c1 > 0.0) {
        double limit = 0.0;
        bool unbounded_ratio = false;
        if (a.c2 > 0.0)
            limit = 0.0;
        else if (a.c1 > 0.0)
            limit = b.c1 / a.c1;
        else
            unbounded_ratio = true; // alpha constant, beta increasing
        if (unbounded_ratio) {
            out.feasible = true;
            out.value = kInf;
            out.at_infinity = true;
        } else if (!out.feasible || limit > out.value) {
            out.feasible = true;
            out.value = limit;
            out.at_infinity = true;
        }
    }
    return out;
}

// Feasible t-intervals of beta(t) >= 0, t >= 0; `cap` bounds open rays.
std::vector<std::pair<double, double>> feasible_intervals(const Quadratic& b,
                                                          double cap) {
    std::vector<std::pair<double, double>> out;
    if (b.c2 < 0.0) {
        const auto roots = real_roots(b);
        if (roots.size() < 2) {
            if (b(0.0) >= 0.0) out.emplace_back(0.0, 0.0);
            return out;
        }
        const double lo = std::max(0.0, roots[0]);
        if (roots[1] >= 0.0 && lo <= roots[1]) out.emplace_back(lo, roots[1]);
        return out;
    }
    if (b.c1 > 0.0) {
        out.emplace_back(std::max(0.0, -b.c0 / b.c1), cap);
    } else if (b.c1 < 0.0) {
        const double hi = -b.c0 / b.c1;
        if (hi >= 0.0) out.emplace_back(0.0, hi);
    } else if (b.c0 >= 0.0) {
        out.emplace_back(0.0, b.c0 > 0.0 ? cap : 0.0);
    }
    return out;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 120 && (b - a) > 1e-13 * std::max(1.0, b); ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

BoundInputs BoundInputs::from(const GeomInvariants& inv, bool kahler) {
    BoundInputs in;
    in.n = inv.n;
    in.r_min = inv.r_min;
    in.r_max = inv.r_max;
    in.kappa = inv.kappa;
    in.ric_sq_min = inv.ric_sq_min;
    in.traceless_sq_max = inv.traceless_sq_max;
    in.epsilon = inv.epsilon;
    in.tau = inv.tau;
    in.theta_vanishes = inv.theta_vanishes;
    in.kahler = kahler;
    return in;
}

// Sums like |Ric|^2_min - R_* kappa cancel exactly on Einstein inputs but
// leave ulp-level residue in floating point; treat such residue as zero so
// the degenerate (constant-beta) branch is taken exactly.
double snap_cancellation(double value, double term_scale) {
    return std::abs(value) <= 1e-13 * term_scale ? 0.0 : value;
}

Quadratic alpha_poly(const BoundInputs& in) {
    const double f = static_cast<double>(in.n) / (in.n - 1);
    const double lin = snap_cancellation(
        in.r_max / in.n - in.kappa + (in.r_max - in.r_min) / 4.0,
        std::abs(in.r_max / in.n) + std::abs(in.kappa) +
            std::abs(in.r_max - in.r_min) / 4.0);
    return {1.0, 2.0 * f * lin, f * in.traceless_sq_max};
}

Quadratic beta_poly(const BoundInputs& in) {
    const double f = in.n / (4.0 * (in.n - 1));
    const double lin = snap_cancellation(
        in.ric_sq_min - in.r_star() * in.kappa +
            in.r_min * (in.r_max - in.r_min) / 4.0,
        std::abs(in.ric_sq_min) + std::abs(in.r_star() * in.kappa) +
            std::abs(in.r_min * (in.r_max - in.r_min)) / 4.0);
    return {f * in.r_min, f * 2.0 * lin, -4.0 * f * in.epsilon};
}

Quadratic gamma_poly(const BoundInputs& in) {
    return {0.0, 0.0, in.n * in.tau / (2.0 * (in.n - 1))};
}

AlphaBetaGamma alpha_beta_gamma(const BoundInputs& in, double t) {
    if (t < 0.0)
        throw std::invalid_argument("alpha_beta_gamma: t must be nonnegative");
    return {alpha_poly(in)(t), beta_poly(in)(t), gamma_poly(in)(t)};
}

const char* theorem_name(Theorem t) {
    switch (t) {
    case Theorem::Friedrich: return "Friedrich";
    case Theorem::Kaehler: return "Kaehler";
    case Theorem::Thm41: return "Thm41";
    case Theorem::Thm42: return "Thm42";
    case Theorem::Cor43: return "Cor43";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    }
    return "?";
}

BoundResult friedrich(const BoundInputs& in) {
    BoundResult r;
    r.theorem = Theorem::Friedrich;
    // Gate on the same zero tolerance as r_min_is_zero so a grid-computed
    // R_min of a few ulps does not flip applicability.
    if (in.r_min > zero_tol(in.r_max)) {
        r.applicable = true;
        r.lambda_sq = in.n * in.r_min / (4.0 * (in.n - 1));
    } else {
        r.note = "requires R_min > 0";
    }
    return r;
}

BoundResult kaehler_bound(const BoundInputs& in) {
    BoundResult r;
    r.theorem = Theorem::Kaehler;
    if (!in.kahler) {
        r.note = "manifold not flagged Kaehler";
        return r;
    }
    if (in.n % 2 != 0) {
        r.note = "odd dimension cannot be Kaehler";
        return r;
    }
    if (in.r_min <= zero_tol(in.r_max)) {
        r.note = "requires R_min > 0";
        return r;
    }
    const int m = in.complex_dim();
    const double coeff =
        (m % 2 == 1) ? (m + 1) / (4.0 * m) : m / (4.0 * (m - 1));
    r.applicable = true;
    r.lambda_sq = coeff * in.r_min;
    r.note = "Kaehler flag is user-asserted";
    return r;
}

BoundResult bound_thm42(const BoundInputs& in) {
    BoundResult r;
    r.theorem = Theorem::Thm42;
    if (!in.theta_vanishes) {
        r.note = "requires Theta = 0";
        return r;
    }
    const RatioMax m = maximize_ratio(in);
    if (!m.feasible || m.value <= 0.0) {
        r.note = "beta(t)/alpha(t) attains no positive value";
        return r;
    }
    r.applicable = true;
    r.lambda_sq = m.value;
    if (m.at_infinity)
        r.note = "supremum approached as t -> infinity";
    else
        r.t_opt = m.t;
    return r;
}

BoundResult bound_thm41(const BoundInputs& in) {
    BoundResult r;
    r.theorem = Theorem::Thm41;
    if (in.tau == 0.0) {
        // gamma vanishes identically; the objective collapses to
        // sqrt(beta/alpha) and the maximization coincides with Thm 4.2.
        const RatioMax m = maximize_ratio(in);
        if (!m.feasible || m.value <= 0.0) {
            r.note = "no feasible t gives a positive bound";
            return r;
        }
        r.applicable = true;
        r.lambda_sq = m.value;
        if (m.at_infinity)
            r.note = "supremum approached as t -> infinity";
        else
            r.t_opt = m.t;
        return r;
    }

    const Quadratic a = alpha_poly(in);
    const Quadratic b = beta_poly(in);
    const Quadratic g = gamma_poly(in);
    auto objective = [&](double t) {
        const double at = a(t);
        const double bt = std::max(0.0, b(t));
        const double gt = g(t);
        return (std::sqrt(at * bt + gt * gt) + gt) / at;
    };
    double best_lambda = -kInf;
    double best_t = 0.0;
    for (const auto& [lo, hi] : feasible_intervals(b, 1e6)) {
        if (hi <= lo) {
            if (objective(lo) > best_lambda) {
                best_lambda = objective(lo);
                best_t = lo;
            }
            continue;
        }
        const int scan = 4000;
        std::vector<double> vals(scan + 1);
        for (int i = 0; i <= scan; ++i)
            vals[i] = objective(lo + (hi - lo) * i / scan);
        for (int i = 0; i <= scan; ++i) {
            const bool local_max = (i == 0 || vals[i] >= vals[i - 1]) &&
                                   (i == scan || vals[i] >= vals[i + 1]);
            if (!local_max) continue;
            const double step = (hi - lo) / scan;
            const double l = std::max(lo, lo + step * (i - 1));
            const double h = std::min(hi, lo + step * (i + 1));
            const double t = golden_max(objective, l, h);
            const double v = std::max({objective(t), vals[i]});
            if (v > best_lambda) {
                best_lambda = v;
                best_t = v == vals[i] ? lo + step * i : t;
            }
        }
    }
    if (!(best_lambda > 0.0)) {
        r.note = "no feasible t gives a positive bound";
        return r;
    }
    r.applicable = true;
    r.lambda_sq = best_lambda * best_lambda;
    r.t_opt = best_t;
    r.note = "nonnegative-eigenvalue branch (tau != 0)";
    return r;
}

Cor43Constants cor43_constants(const BoundInputs& in) {
    Cor43Constants k;
    k.a = in.epsilon / in.ric_sq_min;
    k.b = in.n / (2.0 * (in.n - 1)) *
          ((in.n + 4) / (4.0 * in.n) * in.r_max - in.kappa);
    k.c = in.n / (4.0 * (in.n - 1)) * in.traceless_sq_max;
    return k;
}

BoundResult bound_cor43(const BoundInputs& in) {
    BoundResult r;
    r.theorem = Theorem::Cor43;
    if (!r_min_is_zero(in)) {
        r.note = "requires R_min = 0";
        return r;
    }
    if (!(in.ric_sq_min > 0.0)) {
        r.note = "requires |Ric|_min > 0";
        return r;
    }
    if (!in.theta_vanishes) {
        r.note = "requires [grad Ric, Ric] = 0";
        return r;
    }
    const Cor43Constants k = cor43_constants(in);
    r.applicable = true;
    // Exact maximum of beta(t)/alpha(t) when R_min = 0: with s = 1/t the
    // critical equation is quadratic in s and the value at its positive root
    // simplifies to this closed form (cross term 2ab under the radical).
    r.lambda_sq = in.n / (8.0 * (in.n - 1)) * in.ric_sq_min /
                  (k.a + k.b + std::sqrt(k.a * k.a + 2.0 * k.a * k.b + k.c));
    return r;
}

VanishingReport vanishing_check(const BoundInputs& in) {
    VanishingReport rep;

    rep.general.id = "vanishing-negative-scalar";
    rep.general.lhs = in.ric_sq_min;
    if (in.r_min <= 0.0) {
        rep.general.rhs =
            in.r_min * (in.kappa - (in.r_max - in.r_min) / 4.0) +
            2.0 * std::sqrt(std::abs(in.r_min) * in.epsilon);
        rep.general.verdict =
            rep.general.lhs > rep.general.rhs ? Verdict::Holds : Verdict::Fails;
    }

    rep.constant_r.id = "vanishing-constant-scalar";
    rep.constant_r.lhs = in.ric_sq_min;
    if (constant_scalar_curvature(in) && in.r_min <= 0.0) {
        const double scalar_r = in.r_min;
        rep.constant_r.rhs = scalar_r * in.kappa +
                             2.0 * std::sqrt(std::abs(scalar_r) * in.epsilon);
        rep.constant_r.verdict = rep.constant_r.lhs > rep.constant_r.rhs
                                     ? Verdict::Holds
                                     : Verdict::Fails;
    }

    rep.zero_r_min.id = "vanishing-zero-scalar-min";
    rep.zero_r_min.lhs = in.ric_sq_min;
    if (r_min_is_zero(in))
        rep.zero_r_min.verdict =
            in.ric_sq_min > 0.0 ? Verdict::Holds : Verdict::Fails;

    rep.no_harmonic_spinors = in.r_min > 0.0 ||
                              rep.general.verdict == Verdict::Holds ||
                              rep.constant_r.verdict == Verdict::Holds ||
                              rep.zero_r_min.verdict == Verdict::Holds;
    return rep;
}

ImprovementReport improvement_check(const BoundInputs& in) {
    ImprovementReport rep;
    rep.condition.id = in.kappa <= 0.0 ? "improvement-kappa-nonpositive"
                                       : "improvement-kappa-positive";
    rep.condition.lhs = in.ric_sq_min;
    if (in.r_min <= 0.0) return rep; // hypothesis R_min > 0 not met

    double rhs = in.r_min / (in.n - 1) *
                 (in.r_max - in.kappa + (in.r_max - in.r_min) / 4.0);
    if (in.kappa > 0.0) rhs += in.kappa * (in.r_max - in.r_min);
    rep.condition.rhs = rhs;
    rep.condition.verdict = rep.condition.lhs > rhs + zero_tol(rhs)
                                ? Verdict::Holds
                                : Verdict::Fails;

    if (constant_scalar_curvature(in)) {
        ConditionCheck c;
        c.id = "improvement-constant-scalar";
        c.lhs = in.ric_sq_min;
        c.rhs = in.r_min / (in.n - 1) * (in.r_min - in.kappa);
        c.verdict = c.lhs > c.rhs + zero_tol(c.rhs) ? Verdict::Holds : Verdict::Fails;
        rep.constant_r = c;
    }
    return rep;
}

BoundReport best_bound(const BoundInputs& in) {
    BoundReport rep;
    rep.inputs = in;
    rep.results = {friedrich(in), kaehler_bound(in), bound_thm41(in),
                   bound_thm42(in), bound_cor43(in)};
    rep.vanishing = vanishing_check(in);
    rep.improvement = improvement_check(in);
    // Ties (to 1e-9 relative) go to the theorem with the weaker caveats:
    // Thm 4.2 gives an unconditional lambda^2 bound, Thm 4.1 only covers the
    // nonnegative branch when tau != 0, Cor 4.3 restates Thm 4.2.
    const Theorem priority[] = {Theorem::Friedrich, Theorem::Kaehler,
                                Theorem::Thm42, Theorem::Thm41, Theorem::Cor43};
    for (Theorem which : priority) {
        for (const auto& r : rep.results) {
            if (r.theorem != which || !r.applicable) continue;
            if (!rep.best ||
                r.lambda_sq >
                    rep.best_lambda_sq + 1e-9 * std::max(1.0, rep.best_lambda_sq)) {
                rep.best = r.theorem;
                rep.best_lambda_sq = r.lambda_sq;
            }
        }
    }
    return rep;
}

} // namespace ricbound
