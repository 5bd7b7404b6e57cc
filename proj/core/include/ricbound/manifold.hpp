#ifndef RICBOUND_MANIFOLD_HPP
#define RICBOUND_MANIFOLD_HPP

#include "ricbound/jet.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ricbound {

/// Einstein factor of constant scalar curvature (dim 1 forces scalar 0).
struct EinsteinFactor {
    int dim = 0;
    double scalar = 0.0;
};

/// Embedded torus of revolution in R^3 with tube ratio 2:1 and scale rho;
/// Gaussian curvature K(u) = cos u / (rho^2 (2 + cos u)).
struct TorusRevFactor {
    double rho = 1.0;
};

using FactorSpec = std::variant<EinsteinFactor, TorusRevFactor>;

/// Riemannian product of Einstein factors and tori of revolution.
struct ProductSpec {
    std::string name;
    std::vector<FactorSpec> factors;
    bool kahler = false; // user-asserted, never verified

    int dim() const;
    int torus_count() const;
    void validate() const; // throws std::invalid_argument on bad factor data
};

/// One parameter u in [0, 2pi) per torus factor, in factor order.
using PointCoord = std::vector<double>;

struct GridConfig {
    int resolution = 8192; // samples per torus parameter
};

/// Global scalars feeding the eigenvalue bounds.
struct GeomInvariants {
    int n = 0;
    double r_min = 0.0;
    double r_max = 0.0;
    double kappa = 0.0;            // min Ricci eigenvalue
    double ric_sq_min = 0.0;       // |Ric|^2_min
    double traceless_sq_max = 0.0; // |Ric - R/n|^2_max
    double epsilon = 0.0;
    double tau = 0.0;
    bool theta_vanishes = true;
    bool commuting_derivs = true;
    bool divergence_free = false;
};

/// Curvature jet of the product at the given torus coordinates.
PointJet jet_at(const ProductSpec& spec, const PointCoord& point);

/// Gaussian curvature of the torus of revolution and its u-derivative.
double torus_gauss_curvature(double rho, double u);
double torus_gauss_curvature_du(double rho, double u);

struct Extremes {
    double min = 0.0;
    double max = 0.0;
    PointCoord argmin;
    PointCoord argmax;
};

/// Extremes of a continuous function over the coordinate torus: dense grid
/// scan followed by coordinate-wise golden-section refinement.
Extremes extremize(const std::function<double(const PointCoord&)>& f,
                   const ProductSpec& spec, const GridConfig& grid);

/// All global invariants; epsilon is cross-checked against the spectral
/// path on a jet subsample (throws NumericalError on disagreement).
GeomInvariants invariants(const ProductSpec& spec, const GridConfig& grid = {});

struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ricbound

#endif
