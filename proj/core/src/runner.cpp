#include "ricbound/runner.hpp"

#include "ricbound/clifford.hpp"
#include "ricbound/endomorphism.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace ricbound {
namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fmt3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string describe_factor(const FactorSpec& f) {
    if (const auto* e = std::get_if<EinsteinFactor>(&f))
        return "einstein(dim=" + fmt(e->dim) + ", scalar=" + fmt(e->scalar) + ")";
    return "torus_rev(rho=" + fmt(std::get<TorusRevFactor>(f).rho) + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void print_condition(std::ostringstream& out, const ConditionCheck& c) {
    out << "  " << c.id << ": " << verdict_name(c.verdict);
    if (c.verdict != Verdict::HypothesisNotMet)
        out << "  (lhs=" << fmt(c.lhs) << ", rhs=" << fmt(c.rhs) << ")";
    out << "\n";
}

ProductSpec with_swept_value(ProductSpec spec, const SweepSpec& sw, double value) {
    auto& f = spec.factors[sw.factor_index];
    if (auto* t = std::get_if<TorusRevFactor>(&f))
        t->rho = value;
    else
        std::get<EinsteinFactor>(f).scalar = value;
    return spec;
}

} // namespace

std::string render_report(const RunConfig& cfg) {
    const GeomInvariants inv =
        invariants(cfg.manifold, GridConfig{cfg.grid_resolution});
    const BoundInputs in = BoundInputs::from(inv, cfg.manifold.kahler);
    const BoundReport rep = best_bound(in);

    std::ostringstream out;
    out << "manifold " << cfg.manifold.name << "  (n=" << inv.n << ")\n";
    out << "factors:";
    for (const auto& f : cfg.manifold.factors) out << " " << describe_factor(f);
    out << "\n";
    if (cfg.manifold.kahler)
        out << "kahler flag: true (user-asserted; the Kaehler bound is applied "
               "on this assertion)\n";
    else
        out << "kahler flag: false\n";
    out << "grid resolution: " << cfg.grid_resolution << "\n\n";

    out << "invariants:\n";
    out << "  R_min                = " << fmt(inv.r_min) << "\n";
    out << "  R_max                = " << fmt(inv.r_max) << "\n";
    out << "  kappa                = " << fmt(inv.kappa) << "\n";
    out << "  |Ric|^2_min          = " << fmt(inv.ric_sq_min) << "\n";
    out << "  |Ric - R/n|^2_max    = " << fmt(inv.traceless_sq_max) << "\n";
    out << "  epsilon              = " << fmt(inv.epsilon) << "\n";
    out << "  tau                  = " << fmt(inv.tau) << "\n";
    out << "  Theta = 0            : " << yes_no(inv.theta_vanishes) << "\n";
    out << "  commuting derivs     : " << yes_no(inv.commuting_derivs) << "\n";
    out << "  divergence-free curv : " << yes_no(inv.divergence_free) << "\n\n";

    out << "lower bounds on lambda^2:\n";
    for (const auto& r : rep.results) {
        out << "  " << theorem_name(r.theorem) << ": ";
        if (r.applicable) {
            out << fmt(r.lambda_sq);
            if (r.t_opt) out << "  (t_opt=" << fmt(*r.t_opt) << ")";
            if (!r.note.empty()) out << "  [" << r.note << "]";
        } else {
            out << "not applicable (" << r.note << ")";
        }
        out << "\n";
    }
    out << "\nvanishing conditions:\n";
    print_condition(out, rep.vanishing.general);
    print_condition(out, rep.vanishing.constant_r);
    print_condition(out, rep.vanishing.zero_r_min);
    out << "  no harmonic spinors: " << yes_no(rep.vanishing.no_harmonic_spinors)
        << "\n";
    out << "\nimprovement over the Friedrich bound:\n";
    print_condition(out, rep.improvement.condition);
    if (rep.improvement.constant_r)
        print_condition(out, *rep.improvement.constant_r);
    out << "\n";
    if (rep.best)
        out << "best: " << theorem_name(*rep.best)
            << "  lambda^2 >= " << fmt3(rep.best_lambda_sq) << "\n";
    else
        out << "best: none applicable\n";
    return out.str();
}

std::string render_sweep(const RunConfig& cfg) {
    if (!cfg.sweep)
        throw ConfigError(0, "sweep requested but no sweep block configured");
    const SweepSpec& sw = *cfg.sweep;
    std::ostringstream out;
    out << "param,R_min,R_max,kappa,ricSqMin,tracelessSqMax,epsilon,"
           "bound_friedrich,bound_thm42,t_opt,vanishing_25\n";
    for (int i = 0; i < sw.steps; ++i) {
        const double p = sw.from + (sw.to - sw.from) * i / (sw.steps - 1);
        const ProductSpec spec = with_swept_value(cfg.manifold, sw, p);
        const GeomInvariants inv = invariants(spec, GridConfig{cfg.grid_resolution});
        const BoundInputs in = BoundInputs::from(inv, spec.kahler);
        const BoundResult fr = friedrich(in);
        const BoundResult b42 = bound_thm42(in);
        const VanishingReport van = vanishing_check(in);
        out << fmt(p) << "," << fmt(inv.r_min) << "," << fmt(inv.r_max) << ","
            << fmt(inv.kappa) << "," << fmt(inv.ric_sq_min) << ","
            << fmt(inv.traceless_sq_max) << "," << fmt(inv.epsilon) << ","
            << (fr.applicable ? fmt(fr.lambda_sq) : "na") << ","
            << (b42.applicable ? fmt(b42.lambda_sq) : "na") << ","
            << (b42.t_opt ? fmt(*b42.t_opt) : "na") << ","
            << verdict_name(van.general.verdict) << "\n";
    }
    return out.str();
}

PointJet random_jet(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    auto sym = [&] {
        Eigen::MatrixXd m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = dist(rng);
        return Eigen::MatrixXd(0.5 * (m + m.transpose()));
    };
    Eigen::MatrixXd ric = sym();
    std::vector<Eigen::MatrixXd> grad;
    grad.reserve(n);
    for (int k = 0; k < n; ++k) grad.push_back(sym());

    // Project onto the contracted Bianchi constraint div Ric = (1/2) dR,
    // which the algebraic identities on A, E and T assume. Adding the
    // symmetric correction D_k = (c e_k^T + e_k c^T)/2 shifts the violation
    // by (n/2) c.
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    for (int j = 0; j < n; ++j) {
        v += grad[j].row(j).transpose();
        v[j] -= 0.5 * grad[j].trace();
    }
    const Eigen::VectorXd c = -2.0 / n * v;
    for (int k = 0; k < n; ++k) {
        grad[k].row(k) += 0.5 * c.transpose();
        grad[k].col(k) += 0.5 * c;
    }
    return PointJet(std::move(ric), std::move(grad));
}

bool VerifyResult::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed()) return false;
    return true;
}

std::string VerifyResult::summary() const {
    std::ostringstream out;
    for (const auto& c : checks)
        out << (c.passed() ? "PASS" : "FAIL") << "  " << c.name
            << "  max_residual=" << fmt(c.max_residual)
            << "  tol=" << fmt(c.tolerance) << "\n";
    out << (all_passed() ? "verification passed" : "verification FAILED") << "\n";
    return out.str();
}

VerifyResult run_verify(const RunConfig& cfg, int random_jets) {
    const int n = cfg.manifold.dim();
    const CliffordRep rep(n);
    const int d = rep.spinor_dim();
    const MatrixC id = MatrixC::Identity(d, d);

    std::vector<PointJet> manifold_jets;
    const int axes = cfg.manifold.torus_count();
    if (axes == 0) {
        manifold_jets.push_back(jet_at(cfg.manifold, {}));
    } else {
        const int m = axes > 1 ? 16 : std::min(cfg.grid_resolution, 64);
        std::vector<int> idx(axes, 0);
        for (;;) {
            PointCoord p(axes);
            for (int a = 0; a < axes; ++a)
                p[a] = idx[a] * 2.0 * std::numbers::pi / m;
            manifold_jets.push_back(jet_at(cfg.manifold, p));
            int axis = 0;
            while (axis < axes && ++idx[axis] == m) {
                idx[axis] = 0;
                ++axis;
            }
            if (axis == axes) break;
        }
    }

    std::mt19937 rng(cfg.seed);
    std::vector<PointJet> all_jets = manifold_jets;
    for (int i = 0; i < random_jets; ++i) all_jets.push_back(random_jet(n, rng));

    VerifyResult result;
    auto add = [&](const std::string& name, double residual) {
        result.checks.push_back({name, residual, 1e-10});
    };

    double anti = 0.0, skew_gen = 0.0;
    for (int i = 0; i < n; ++i) {
        skew_gen = std::max(
            skew_gen,
            (rep.generator(i).adjoint() + rep.generator(i)).norm());
        for (int j = 0; j < n; ++j) {
            const MatrixC lhs = rep.generator(i) * rep.generator(j) +
                                rep.generator(j) * rep.generator(i) +
                                (i == j ? 2.0 : 0.0) * id;
            anti = std::max(anti, lhs.norm());
        }
    }
    add("generator-anticommutators", anti);
    add("generator-skew-hermitian", skew_gen);

    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double trace_contract = 0.0;
    for (int rep_i = 0; rep_i < 8; ++rep_i) {
        Eigen::MatrixXd s(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s(i, j) = dist(rng);
        s = Eigen::MatrixXd(0.5 * (s + s.transpose()));
        trace_contract = std::max(
            trace_contract,
            (sym_trace_contract(rep, s).mat + s.trace() * id).norm());
    }
    add("symmetric-trace-contraction", trace_contract);

    double a_skew = 0.0, trace_a_res = 0.0, kernel_res = 0.0;
    double e_formula_res = 0.0, e_psd = 0.0;
    double t_herm = 0.0, t_comm_res = 0.0, t_theta_res = 0.0, theta_antisym = 0.0;
    for (const auto& jet : all_jets) {
        for (int k = 0; k < n; ++k) {
            const MatrixC a = build_a(rep, jet, Eigen::VectorXd::Unit(n, k)).mat;
            a_skew = std::max(a_skew, (a.adjoint() + a).norm());
        }
        Eigen::VectorXd x(n);
        for (int k = 0; k < n; ++k) x[k] = dist(rng);
        const MatrixC ax = build_a(rep, jet, x).mat;
        a_skew = std::max(a_skew, (ax.adjoint() + ax).norm());

        const MatrixC ta = trace_a(rep, jet).mat;
        trace_a_res = std::max(
            trace_a_res, (ta + 0.25 * vector_mult(rep, jet.dR).mat).norm());

        MatrixC kernel = MatrixC::Zero(d, d);
        const MatrixC dr = vector_mult(rep, jet.dR).mat;
        for (int k = 0; k < n; ++k)
            kernel += rep.generator(k) *
                      (build_a(rep, jet, Eigen::VectorXd::Unit(n, k)).mat -
                       rep.generator(k) * dr / (4.0 * n));
        kernel_res = std::max(kernel_res, kernel.norm());

        const MatrixC e = build_e(rep, jet).mat;
        e_formula_res =
            std::max(e_formula_res, (e - build_e_formula(rep, jet).mat).norm());
        Eigen::SelfAdjointEigenSolver<MatrixC> es(e, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw NumericalError("verify: eigensolver failed to converge");
        e_psd = std::max(e_psd, std::max(0.0, -es.eigenvalues().minCoeff()));

        const MatrixC t = build_t(rep, jet).mat;
        t_herm = std::max(t_herm, (t.adjoint() - t).norm());
        t_comm_res = std::max(
            t_comm_res, (t - build_t_from_commutators(rep, jet).mat).norm());
        const ThreeForm theta = build_theta(jet);
        t_theta_res =
            std::max(t_theta_res, (t - form_mult3(rep, theta).mat).norm());
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    theta_antisym = std::max(
                        {theta_antisym,
                         std::abs(theta[j](k, l) + theta[k](j, l)),
                         std::abs(theta[j](k, l) + theta[j](l, k))});
    }
    add("A-skew-hermitian", a_skew);
    add("traceA-equals-quarter-dR", trace_a_res);
    add("clifford-kernel-identity", kernel_res);
    add("E-commutator-expansion", e_formula_res);
    add("E-positive-semidefinite", e_psd);
    add("T-hermitian", t_herm);
    add("T-commutator-contraction", t_comm_res);
    add("T-equals-theta-action", t_theta_res);
    add("theta-antisymmetry", theta_antisym);

    // Product jets have pairwise commuting Ricci derivatives that also
    // commute with Ric: E collapses to a scalar and T vanishes.
    double e_scalar_res = 0.0, t_zero = 0.0, comm_res = 0.0;
    for (const auto& jet : manifold_jets) {
        const double scalar =
            0.25 * jet.grad_ric_norm_sq - jet.dR_norm_sq / 16.0;
        e_scalar_res = std::max(
            e_scalar_res, (build_e(rep, jet).mat - scalar * id).norm());
        t_zero = std::max(t_zero, build_t(rep, jet).mat.norm());
        for (int j = 0; j < n; ++j) {
            comm_res = std::max(comm_res, (jet.grad_ric[j] * jet.ric -
                                           jet.ric * jet.grad_ric[j])
                                              .norm());
            for (int k = j + 1; k < n; ++k)
                comm_res = std::max(comm_res,
                                    (jet.grad_ric[j] * jet.grad_ric[k] -
                                     jet.grad_ric[k] * jet.grad_ric[j])
                                        .norm());
        }
    }
    add("product-jet-E-scalar", e_scalar_res);
    add("product-jet-T-zero", t_zero);
    add("product-jet-commutators-zero", comm_res);
    return result;
}

} // namespace ricbound
