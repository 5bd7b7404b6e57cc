#include "ricbound/manifold.hpp"

#include "ricbound/clifford.hpp"
#include "ricbound/endomorphism.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ricbound {
namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

int axis_resolution(const ProductSpec& spec, const GridConfig& grid) {
    // Joint scans across several torus factors are capped per axis; the
    // coordinate-wise refinement recovers the lost resolution.
    if (spec.torus_count() <= 1) return grid.resolution;
    return std::clamp(grid.resolution, 64, 256);
}

// Refine one coordinate by golden-section search inside [lo, hi].
double golden_section(const std::function<double(double)>& g, double lo,
                      double hi, bool maximize) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = g(c), fd = g(d);
    for (int it = 0; it < 90 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
        const bool keep_left = maximize ? (fc > fd) : (fc < fd);
        if (keep_left) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = g(d);
        }
    }
    return 0.5 * (a + b);
}

PointCoord refine(const std::function<double(const PointCoord&)>& f,
                  PointCoord point, double step, bool maximize) {
    double best = f(point);
    for (int sweep = 0; sweep < 8; ++sweep) {
        const double before = best;
        for (std::size_t axis = 0; axis < point.size(); ++axis) {
            PointCoord probe = point;
            const double u = golden_section(
                [&](double v) {
                    probe[axis] = v;
                    return f(probe);
                },
                point[axis] - step, point[axis] + step, maximize);
            probe[axis] = u;
            const double val = f(probe);
            if (maximize ? val >= best : val <= best) {
                best = val;
                point = probe;
            }
        }
        if (std::abs(best - before) <= 1e-13 * std::max(1.0, std::abs(best)))
            break;
    }
    return point;
}

} // namespace

int ProductSpec::dim() const {
    int n = 0;
    for (const auto& f : factors)
        n += std::holds_alternative<EinsteinFactor>(f)
                 ? std::get<EinsteinFactor>(f).dim
                 : 2;
    return n;
}

int ProductSpec::torus_count() const {
    int c = 0;
    for (const auto& f : factors)
        if (std::holds_alternative<TorusRevFactor>(f)) ++c;
    return c;
}

void ProductSpec::validate() const {
    if (factors.empty())
        throw std::invalid_argument("ProductSpec: at least one factor required");
    for (const auto& f : factors) {
        if (const auto* e = std::get_if<EinsteinFactor>(&f)) {
            if (e->dim < 1)
                throw std::invalid_argument("ProductSpec: factor dimension must be >= 1");
            if (e->dim == 1 && e->scalar != 0.0)
                throw std::invalid_argument(
                    "ProductSpec: a 1-dimensional factor must be flat (scalar = 0)");
            if (!std::isfinite(e->scalar))
                throw std::invalid_argument("ProductSpec: non-finite scalar curvature");
        } else {
            const auto& t = std::get<TorusRevFactor>(f);
            if (!(t.rho > 0.0) || !std::isfinite(t.rho))
                throw std::invalid_argument("ProductSpec: torus scale rho must be positive");
        }
    }
    const int n = dim();
    if (n < 2 || n > 12)
        throw std::invalid_argument("ProductSpec: total dimension must be in [2, 12]");
}

double torus_gauss_curvature(double rho, double u) {
    return std::cos(u) / (rho * rho * (2.0 + std::cos(u)));
}

double torus_gauss_curvature_du(double rho, double u) {
    const double c = 2.0 + std::cos(u);
    return -2.0 * std::sin(u) / (rho * rho * c * c);
}

PointJet jet_at(const ProductSpec& spec, const PointCoord& point) {
    spec.validate();
    if (static_cast<int>(point.size()) != spec.torus_count())
        throw std::invalid_argument("jet_at: coordinate count mismatch");
    const int n = spec.dim();
    Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
    std::vector<Eigen::MatrixXd> grad(n, Eigen::MatrixXd::Zero(n, n));
    int offset = 0;
    int coord = 0;
    for (const auto& f : spec.factors) {
        if (const auto* e = std::get_if<EinsteinFactor>(&f)) {
            const double eig = e->dim > 1 ? e->scalar / e->dim : 0.0;
            ric.block(offset, offset, e->dim, e->dim) =
                eig * Eigen::MatrixXd::Identity(e->dim, e->dim);
            offset += e->dim;
        } else {
            const auto& t = std::get<TorusRevFactor>(f);
            const double u = point[coord++];
            const double k = torus_gauss_curvature(t.rho, u);
            ric.block(offset, offset, 2, 2) = k * Eigen::MatrixXd::Identity(2, 2);
            // Ric varies along the unit u-direction only (first frame vector
            // of the block); arc length along u is rho du.
            const double dk = torus_gauss_curvature_du(t.rho, u) / t.rho;
            grad[offset].block(offset, offset, 2, 2) =
                dk * Eigen::MatrixXd::Identity(2, 2);
            offset += 2;
        }
    }
    return PointJet(std::move(ric), std::move(grad));
}

Extremes extremize(const std::function<double(const PointCoord&)>& f,
                   const ProductSpec& spec, const GridConfig& grid) {
    const int axes = spec.torus_count();
    Extremes out;
    if (axes == 0) {
        out.min = out.max = f({});
        return out;
    }
    const int res = axis_resolution(spec, grid);
    const double step = two_pi / res;
    PointCoord point(axes, 0.0);
    PointCoord best_min = point, best_max = point;
    double vmin = f(point), vmax = vmin;
    std::vector<int> idx(axes, 0);
    for (;;) {
        int axis = 0;
        while (axis < axes && ++idx[axis] == res) {
            idx[axis] = 0;
            ++axis;
        }
        if (axis == axes) break;
        for (int a = 0; a < axes; ++a) point[a] = idx[a] * step;
        const double v = f(point);
        if (v < vmin) {
            vmin = v;
            best_min = point;
        }
        if (v > vmax) {
            vmax = v;
            best_max = point;
        }
    }
    out.argmin = refine(f, best_min, step, false);
    out.argmax = refine(f, best_max, step, true);
    for (auto& u : out.argmin) u = std::fmod(u + two_pi, two_pi);
    for (auto& u : out.argmax) u = std::fmod(u + two_pi, two_pi);
    out.min = f(out.argmin);
    out.max = f(out.argmax);
    return out;
}

GeomInvariants invariants(const ProductSpec& spec, const GridConfig& grid) {
    spec.validate();
    if (spec.torus_count() > 0 && grid.resolution < 64)
        throw std::invalid_argument("invariants: grid resolution must be >= 64");
    const int n = spec.dim();

    // Per-point scalars in closed form; coordinates map to torus factors in
    // factor order.
    struct FactorView {
        bool torus;
        int dim;
        double scalar; // Einstein scalar curvature
        double rho;
    };
    std::vector<FactorView> views;
    for (const auto& f : spec.factors) {
        if (const auto* e = std::get_if<EinsteinFactor>(&f))
            views.push_back({false, e->dim, e->scalar, 0.0});
        else
            views.push_back({true, 2, 0.0, std::get<TorusRevFactor>(f).rho});
    }
    auto factor_scalars = [&](const PointCoord& p, auto&& fn) {
        int coord = 0;
        for (const auto& v : views) {
            if (v.torus) {
                const double k = torus_gauss_curvature(v.rho, p[coord]);
                fn(v, 2.0 * k, p[coord]);
                ++coord;
            } else {
                fn(v, v.scalar, 0.0);
            }
        }
    };
    auto scalar_curv = [&](const PointCoord& p) {
        double r = 0.0;
        factor_scalars(p, [&](const FactorView&, double rk, double) { r += rk; });
        return r;
    };
    auto ric_sq = [&](const PointCoord& p) {
        double s = 0.0;
        factor_scalars(p, [&](const FactorView& v, double rk, double) {
            if (v.dim > 1) s += rk * rk / v.dim;
        });
        return s;
    };
    auto traceless_sq = [&](const PointCoord& p) {
        const double mean = scalar_curv(p) / n;
        double s = 0.0;
        factor_scalars(p, [&](const FactorView& v, double rk, double) {
            const double eig = v.dim > 1 ? rk / v.dim : 0.0;
            s += v.dim * (eig - mean) * (eig - mean);
        });
        return s;
    };
    auto min_ric_eig = [&](const PointCoord& p) {
        double m = std::numeric_limits<double>::infinity();
        factor_scalars(p, [&](const FactorView& v, double rk, double) {
            m = std::min(m, v.dim > 1 ? rk / v.dim : 0.0);
        });
        return m;
    };
    // 1/4 |grad Ric|^2 - 1/16 |dR|^2, valid as epsilon because all product
    // jets here have pairwise commuting Ricci derivatives.
    auto e_scalar = [&](const PointCoord& p) {
        double s = 0.0;
        factor_scalars(p, [&](const FactorView& v, double, double u) {
            if (!v.torus) return;
            const double dk = torus_gauss_curvature_du(v.rho, u) / v.rho;
            s += 0.25 * dk * dk;
        });
        return s;
    };

    GeomInvariants inv;
    inv.n = n;
    const Extremes r_ext = extremize(scalar_curv, spec, grid);
    inv.r_min = r_ext.min;
    inv.r_max = r_ext.max;
    inv.ric_sq_min = std::max(0.0, extremize(ric_sq, spec, grid).min);
    inv.traceless_sq_max = std::max(0.0, extremize(traceless_sq, spec, grid).max);
    inv.kappa = extremize(min_ric_eig, spec, grid).min;
    inv.epsilon = std::max(0.0, extremize(e_scalar, spec, grid).max);
    inv.tau = 0.0;
    inv.theta_vanishes = true;
    inv.commuting_derivs = true;
    inv.divergence_free = spec.torus_count() == 0;

    // Cross-check the closed-form epsilon path against the Clifford spectral
    // path on a coarse jet subsample.
    const int axes = spec.torus_count();
    std::vector<PointJet> jets;
    if (axes == 0) {
        jets.push_back(jet_at(spec, {}));
    } else {
        const int m = 33;
        std::vector<int> idx(axes, 0);
        for (;;) {
            PointCoord p(axes);
            for (int a = 0; a < axes; ++a) p[a] = idx[a] * two_pi / m;
            jets.push_back(jet_at(spec, p));
            int axis = 0;
            while (axis < axes && ++idx[axis] == m) {
                idx[axis] = 0;
                ++axis;
            }
            if (axis == axes) break;
        }
    }
    const CliffordRep rep(n);
    const SpectralExtremes spectral = epsilon_tau(rep, jets);
    double eps_formula = 0.0;
    for (const auto& jet : jets)
        eps_formula = std::max(
            eps_formula, 0.25 * jet.grad_ric_norm_sq - jet.dR_norm_sq / 16.0);
    if (std::abs(spectral.epsilon - eps_formula) >
        1e-8 * std::max(1.0, std::abs(eps_formula)))
        throw NumericalError("invariants: spectral epsilon disagrees with the "
                             "closed-form path");
    if (std::abs(spectral.tau) > 1e-10)
        throw NumericalError("invariants: spectral tau is not zero");
    return inv;
}

} // namespace ricbound
