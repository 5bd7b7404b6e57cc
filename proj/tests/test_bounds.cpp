#include "ricbound/bounds.hpp"

#include <doctest.h>
#include <cmath>
#include <random>

using namespace ricbound;

namespace {

BoundInputs sphere_inputs(int n, double r) {
    BoundInputs in;
    in.n = n;
    const double scalar = n * (n - 1) / (r * r);
    in.r_min = in.r_max = scalar;
    in.kappa = (n - 1) / (r * r);
    in.ric_sq_min = scalar * scalar / n;
    in.traceless_sq_max = 0.0;
    in.epsilon = 0.0;
    in.tau = 0.0;
    in.theta_vanishes = true;
    return in;
}

BoundInputs m4_inputs(double r, double rho) {
    BoundInputs in;
    in.n = 4;
    const double r2 = r * r, rho2 = rho * rho;
    in.r_min = 2.0 * (1.0 / r2 - 1.0 / rho2);
    in.r_max = 2.0 * (1.0 / r2 + 1.0 / (3.0 * rho2));
    in.kappa = -1.0 / rho2;
    in.ric_sq_min = 2.0 / (r2 * r2);
    in.traceless_sq_max = std::pow(1.0 / r2 + 1.0 / rho2, 2);
    in.epsilon = (3.0 + 2.0 * std::sqrt(3.0)) / (36.0 * std::pow(rho, 6));
    in.tau = 0.0;
    in.theta_vanishes = true;
    in.kahler = true;
    return in;
}

BoundInputs m6_inputs(double rho) {
    BoundInputs in;
    in.n = 6;
    const double rho2 = rho * rho;
    in.r_min = -2.0 / rho2;
    in.r_max = 2.0 / (3.0 * rho2);
    in.kappa = -1.0;
    in.ric_sq_min = 4.0;
    in.traceless_sq_max = 4.0 * (1.0 + 1.0 / (3.0 * rho2 * rho2));
    in.epsilon = (3.0 + 2.0 * std::sqrt(3.0)) / (36.0 * std::pow(rho, 6));
    in.tau = 0.0;
    in.theta_vanishes = true;
    return in;
}

// Dense-grid oracle for max of beta/alpha over the feasible t range.
double grid_oracle_thm42(const BoundInputs& in, long points = 1'000'000) {
    const Quadratic a = alpha_poly(in);
    const Quadratic b = beta_poly(in);
    // upper end of the feasible interval (epsilon > 0 assumed)
    const double disc = b.c1 * b.c1 - 4.0 * b.c2 * b.c0;
    if (disc < 0.0) return 0.0;
    const double hi = (-b.c1 - std::sqrt(disc)) / (2.0 * b.c2);
    if (hi <= 0.0) return 0.0;
    double best = 0.0;
    for (long i = 0; i <= points; ++i) {
        const double t = hi * i / points;
        const double bt = b(t);
        if (bt < 0.0) continue;
        best = std::max(best, bt / a(t));
    }
    return best;
}

double grid_oracle_thm41(const BoundInputs& in, long points = 1'000'000) {
    const Quadratic a = alpha_poly(in);
    const Quadratic b = beta_poly(in);
    const Quadratic g = gamma_poly(in);
    const double disc = b.c1 * b.c1 - 4.0 * b.c2 * b.c0;
    if (disc < 0.0) return 0.0;
    const double hi = (-b.c1 - std::sqrt(disc)) / (2.0 * b.c2);
    if (hi <= 0.0) return 0.0;
    double best = 0.0;
    for (long i = 0; i <= points; ++i) {
        const double t = hi * i / points;
        const double bt = b(t);
        if (bt < 0.0) continue;
        const double gt = g(t);
        const double lam = (std::sqrt(a(t) * bt + gt * gt) + gt) / a(t);
        best = std::max(best, lam);
    }
    return best * best;
}

BoundInputs random_admissible(std::mt19937& rng) {
    std::uniform_real_distribution<double> unit(0.05, 2.0);
    std::uniform_real_distribution<double> signed_unit(-1.0, 1.5);
    std::uniform_int_distribution<int> dims(2, 10);
    BoundInputs in;
    in.n = dims(rng);
    in.r_min = signed_unit(rng);
    in.r_max = in.r_min + unit(rng);
    in.kappa = std::min(in.r_max / in.n, signed_unit(rng));
    in.ric_sq_min = unit(rng);
    in.traceless_sq_max = unit(rng);
    in.epsilon = unit(rng);
    in.tau = -std::abs(signed_unit(rng));
    in.theta_vanishes = true;
    return in;
}

} // namespace

TEST_CASE("Friedrich bound") {
    SUBCASE("round 2-sphere") {
        const BoundResult r = friedrich(sphere_inputs(2, 1.0));
        CHECK(r.applicable);
        CHECK(r.lambda_sq == doctest::Approx(1.0));
    }
    SUBCASE("sphere-torus with r < rho") {
        BoundInputs in = m4_inputs(1.0, std::sqrt(10.0) / 3.0);
        const BoundResult r = friedrich(in);
        CHECK(r.applicable);
        CHECK(r.lambda_sq == doctest::Approx(1.0 / 15.0).epsilon(1e-12));
    }
    SUBCASE("nonpositive scalar curvature is inapplicable") {
        CHECK_FALSE(friedrich(m6_inputs(2.0)).applicable);
    }
}

TEST_CASE("Kaehler bound") {
    SUBCASE("even complex dimension") {
        const BoundResult r = kaehler_bound(m4_inputs(1.0, std::sqrt(10.0) / 3.0));
        CHECK(r.applicable);
        CHECK(r.lambda_sq == doctest::Approx(0.1).epsilon(1e-12));
    }
    SUBCASE("odd complex dimension coefficient") {
        BoundInputs in = sphere_inputs(6, 1.0); // m = 3
        in.kahler = true;
        in.r_min = in.r_max = 12.0;
        const BoundResult r = kaehler_bound(in);
        CHECK(r.applicable);
        CHECK(r.lambda_sq == doctest::Approx(4.0).epsilon(1e-12));
    }
    SUBCASE("m = 1 coefficient is one half") {
        BoundInputs in = sphere_inputs(2, 1.0);
        in.kahler = true;
        const BoundResult r = kaehler_bound(in);
        CHECK(r.applicable);
        CHECK(r.lambda_sq == doctest::Approx(0.5 * in.r_min).epsilon(1e-12));
    }
    SUBCASE("without the flag") {
        CHECK_FALSE(kaehler_bound(sphere_inputs(4, 1.0)).applicable);
    }
}

TEST_CASE("coefficient functions") {
    SUBCASE("t = 0") {
        const BoundInputs in = m6_inputs(2.0);
        const AlphaBetaGamma abg = alpha_beta_gamma(in, 0.0);
        CHECK(abg.alpha == 1.0);
        CHECK(abg.beta ==
              doctest::Approx(in.n * in.r_min / (4.0 * (in.n - 1))).epsilon(1e-12));
        CHECK(abg.gamma == 0.0);
        CHECK_THROWS_AS(alpha_beta_gamma(in, -0.1), std::invalid_argument);
    }
    SUBCASE("six-dimensional product polynomials") {
        for (double rho : {1.5, 2.0, 5.0}) {
            CAPTURE(rho);
            const BoundInputs in = m6_inputs(rho);
            const Quadratic a = alpha_poly(in);
            const Quadratic b = beta_poly(in);
            const double q = 1.0 / (rho * rho);
            CHECK(a.c0 == doctest::Approx(1.0).epsilon(1e-10));
            CHECK(a.c1 == doctest::Approx(12.0 / 5.0 + 28.0 / 15.0 * q).epsilon(1e-10));
            CHECK(a.c2 == doctest::Approx(24.0 / 5.0 + 8.0 / 5.0 * q * q).epsilon(1e-10));
            CHECK(b.c0 == doctest::Approx(-3.0 / 5.0 * q).epsilon(1e-10));
            CHECK(b.c1 ==
                  doctest::Approx(12.0 / 5.0 - 6.0 / 5.0 * q - 4.0 / 5.0 * q * q)
                      .epsilon(1e-10));
            CHECK(b.c2 == doctest::Approx(-(3.0 + 2.0 * std::sqrt(3.0)) / 30.0 *
                                          std::pow(q, 3))
                              .epsilon(1e-10));
        }
    }
    SUBCASE("Einstein space has constant beta") {
        const Quadratic b = beta_poly(sphere_inputs(5, 1.3));
        CHECK(b.c1 == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(b.c2 == 0.0);
    }
}

TEST_CASE("parameterized bounds on the worked products") {
    SUBCASE("equal radii") {
        const BoundInputs in = m4_inputs(1.0, 1.0);
        const BoundResult b42 = bound_thm42(in);
        CHECK(b42.applicable);
        CHECK(b42.lambda_sq == doctest::Approx(0.1142177).epsilon(5e-6));
        const BoundResult b43 = bound_cor43(in);
        CHECK(b43.applicable);
        CHECK(b43.lambda_sq ==
              doctest::Approx(b42.lambda_sq).epsilon(1e-9));
        const Cor43Constants k = cor43_constants(in);
        CHECK(k.a == doctest::Approx((3.0 + 2.0 * std::sqrt(3.0)) / 72.0).epsilon(1e-12));
        CHECK(k.b == doctest::Approx(14.0 / 9.0).epsilon(1e-12));
        CHECK(k.c == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("r smaller than rho") {
        const BoundResult r = bound_thm42(m4_inputs(1.0, std::sqrt(10.0) / 3.0));
        CHECK(r.applicable);
        CHECK(std::abs(r.lambda_sq - 0.1621238) < 5e-5);
    }
    SUBCASE("r larger than rho") {
        const BoundResult r = bound_thm42(m4_inputs(1.0, 3.0 / std::sqrt(10.0)));
        CHECK(r.applicable);
        CHECK(std::abs(r.lambda_sq - 0.0640307) < 5e-5);
    }
    SUBCASE("six-dimensional product at rho = 2") {
        const BoundResult r = bound_thm42(m6_inputs(2.0));
        CHECK(r.applicable);
        CHECK(std::abs(r.lambda_sq - 0.2407) < 5e-4);
    }
    SUBCASE("Theta != 0 gates the theorem") {
        BoundInputs in = m4_inputs(1.0, 1.0);
        in.theta_vanishes = false;
        CHECK_FALSE(bound_thm42(in).applicable);
        CHECK_FALSE(bound_cor43(in).applicable);
    }
}

TEST_CASE("Einstein degeneration ties out with Friedrich") {
    for (int n : {3, 4, 5, 6}) {
        const BoundInputs in = sphere_inputs(n, 1.0);
        const BoundResult b42 = bound_thm42(in);
        const BoundResult fr = friedrich(in);
        CHECK(b42.applicable);
        REQUIRE(b42.t_opt.has_value());
        CHECK(*b42.t_opt == 0.0);
        CHECK(b42.lambda_sq == doctest::Approx(fr.lambda_sq).epsilon(1e-14));

        const ImprovementReport imp = improvement_check(in);
        REQUIRE(imp.constant_r.has_value());
        CHECK(imp.constant_r->verdict == Verdict::Fails);
    }
}

TEST_CASE("tau = 0 collapses the two parameterized bounds") {
    for (const BoundInputs& in :
         {m4_inputs(1.0, 1.0), m4_inputs(1.0, 2.0), m6_inputs(1.5)}) {
        const BoundResult b41 = bound_thm41(in);
        const BoundResult b42 = bound_thm42(in);
        CHECK(b41.applicable == b42.applicable);
        if (b41.applicable) CHECK(b41.lambda_sq == b42.lambda_sq);
    }
}

TEST_CASE("optimizers agree with dense-grid oracles") {
    std::mt19937 rng(31415);
    int checked = 0;
    while (checked < 20) {
        BoundInputs in = random_admissible(rng);
        in.tau = 0.0;
        const BoundResult r = bound_thm42(in);
        const double oracle = grid_oracle_thm42(in, 200'000);
        if (!r.applicable || oracle <= 0.0) continue;
        CHECK(std::abs(r.lambda_sq - oracle) <=
              1e-7 * std::max(1.0, oracle));
        ++checked;
    }

    checked = 0;
    while (checked < 20) {
        const BoundInputs in = random_admissible(rng);
        const BoundResult r = bound_thm41(in);
        const double oracle = grid_oracle_thm41(in, 200'000);
        if (!r.applicable || oracle <= 0.0) continue;
        CHECK(std::abs(r.lambda_sq - oracle) <=
              1e-7 * std::max(1.0, oracle));
        ++checked;
    }
}

TEST_CASE("thm42 dominates its value at t = 0") {
    std::mt19937 rng(99);
    for (int i = 0; i < 50; ++i) {
        BoundInputs in = random_admissible(rng);
        in.r_min = std::abs(in.r_min) + 0.01;
        in.r_max = in.r_min + std::abs(in.r_max - in.r_min);
        in.tau = 0.0;
        const BoundResult r = bound_thm42(in);
        REQUIRE(r.applicable);
        const double friedrich_value = in.n * in.r_min / (4.0 * (in.n - 1));
        CHECK(r.lambda_sq >= friedrich_value * (1.0 - 1e-12));
    }
}

TEST_CASE("unified form reproduces the direct kappa-split inequalities") {
    std::mt19937 rng(271828);
    std::uniform_real_distribution<double> tval(0.0, 3.0);
    std::uniform_real_distribution<double> lval(0.0, 3.0);
    int pos = 0, neg = 0;
    while (pos < 200 || neg < 200) {
        const BoundInputs in = random_admissible(rng);
        if (in.kappa > 0.0 ? ++pos > 200 : ++neg > 200) continue;
        const double t = tval(rng);
        const double lambda = lval(rng);
        const AlphaBetaGamma abg = alpha_beta_gamma(in, t);
        const double unified =
            abg.alpha * lambda * lambda - 2.0 * abg.gamma * lambda - abg.beta;

        const double n = in.n;
        const double lam2 = lambda * lambda;
        const double quad =
            n / (n - 1) * t * t *
            (in.traceless_sq_max * lam2 - in.tau * lambda + in.epsilon);
        double direct;
        if (in.kappa <= 0.0) {
            direct = lam2 - n * in.r_min / (4.0 * (n - 1)) -
                     2.0 * t *
                         (n / (4.0 * (n - 1)) * in.ric_sq_min -
                          in.r_max / (n - 1) * lam2 +
                          n / (n - 1) *
                              (in.kappa - (in.r_max - in.r_min) / 4.0) *
                              (lam2 - in.r_min / 4.0)) +
                     quad;
        } else {
            direct = lam2 - n * in.r_min / (4.0 * (n - 1)) -
                     2.0 * t *
                         (n / (4.0 * (n - 1)) * in.ric_sq_min -
                          in.r_max / (n - 1) * lam2 +
                          n * in.kappa / (n - 1) * (lam2 - in.r_max / 4.0) -
                          n * (in.r_max - in.r_min) / (4.0 * (n - 1)) *
                              (lam2 - in.r_min / 4.0)) +
                     quad;
        }
        CHECK(std::abs(unified - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
    }
}

TEST_CASE("vanishing conditions") {
    SUBCASE("six-dimensional product threshold") {
        CHECK(vanishing_check(m6_inputs(1.05)).general.verdict == Verdict::Holds);
        CHECK(vanishing_check(m6_inputs(1.03)).general.verdict == Verdict::Fails);

        // bracket the threshold rho0
        double lo = 1.0, hi = 1.1;
        for (int i = 0; i < 60; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (vanishing_check(m6_inputs(mid)).general.verdict == Verdict::Holds)
                hi = mid;
            else
                lo = mid;
        }
        CHECK(0.5 * (lo + hi) == doctest::Approx(1.04113).epsilon(5e-5));
    }
    SUBCASE("flat torus fails") {
        BoundInputs in;
        in.n = 4;
        in.theta_vanishes = true;
        const VanishingReport rep = vanishing_check(in);
        CHECK(rep.general.verdict == Verdict::Fails);
        CHECK(rep.zero_r_min.verdict == Verdict::Fails);
        CHECK_FALSE(rep.no_harmonic_spinors);
    }
    SUBCASE("negative-curvature sphere-torus mix") {
        const VanishingReport rep =
            vanishing_check(m4_inputs(1.0, 3.0 / std::sqrt(10.0)));
        CHECK(rep.general.verdict == Verdict::Holds);
        CHECK(rep.no_harmonic_spinors);
    }
    SUBCASE("positive scalar curvature skips the criterion") {
        const VanishingReport rep =
            vanishing_check(m4_inputs(1.0, std::sqrt(10.0) / 3.0));
        CHECK(rep.general.verdict == Verdict::HypothesisNotMet);
        CHECK(rep.no_harmonic_spinors);
    }
}

TEST_CASE("improvement conditions") {
    SUBCASE("sphere-torus with r < rho always improves") {
        for (double rho : {1.1, 2.0, 10.0}) {
            const ImprovementReport rep = improvement_check(m4_inputs(1.0, rho));
            CHECK(rep.condition.verdict == Verdict::Holds);
        }
    }
    SUBCASE("nonpositive scalar curvature is out of hypothesis") {
        const ImprovementReport rep = improvement_check(m6_inputs(2.0));
        CHECK(rep.condition.verdict == Verdict::HypothesisNotMet);
    }
}

TEST_CASE("best_bound aggregation") {
    SUBCASE("r < rho prefers the parameterized bound") {
        const BoundReport rep = best_bound(m4_inputs(1.0, std::sqrt(10.0) / 3.0));
        REQUIRE(rep.best.has_value());
        CHECK(*rep.best == Theorem::Thm42);
        CHECK(std::abs(rep.best_lambda_sq - 0.1621238) < 5e-5);
    }
    SUBCASE("equal radii: Friedrich and Kaehler are inapplicable") {
        const BoundReport rep = best_bound(m4_inputs(1.0, 1.0));
        REQUIRE(rep.best.has_value());
        CHECK(*rep.best == Theorem::Thm42);
        CHECK(std::abs(rep.best_lambda_sq - 0.1142177) < 5e-5);
        CHECK_FALSE(rep.results[0].applicable);
        CHECK_FALSE(rep.results[1].applicable);
    }
    SUBCASE("Einstein sphere reduces to Friedrich") {
        const BoundReport rep = best_bound(sphere_inputs(6, 1.0));
        REQUIRE(rep.best.has_value());
        CHECK(*rep.best == Theorem::Friedrich);
        CHECK(rep.best_lambda_sq == doctest::Approx(9.0));
    }
}
