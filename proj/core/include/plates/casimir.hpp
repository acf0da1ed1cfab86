#pragma once

#include "plates/spectrum.hpp"

namespace plates::casimir {

struct GlobalResult {
    /// Inverse length cubed; negative.
    double energy_per_area = 0.0;
    /// Inverse length to the fourth; negative (attractive).
    double pressure = 0.0;
    BoundaryCondition bc = BoundaryCondition::Dirichlet;
};

struct ReferenceValues {
    double energy_per_area = 0.0;
    double energy_density = 0.0;
    double pressure = 0.0;
};
using EmReference = ReferenceValues;

struct DensityCheck {
    double integral = 0.0;
    double mismatch = 0.0;
};

/// Vacuum energy per unit plate area,
///   E0 = (1/2) sum_n I(d = 2, N = -1/2, k_n^2) = (1/2) I(2, -1/2, (pi/L)^2) zeta(-3),
/// with the transverse integral continued in d and the mode sum continued through
/// the exact rational zeta(-3).  Equal to -pi^2/(1440 L^3) for both conditions.
double total_energy(const PlateConfig& config, BoundaryCondition bc);

/// -dE0/dL = 3 E0 / L = -pi^2/(480 L^4).
double pressure(const PlateConfig& config);

GlobalResult global_result(const PlateConfig& config, BoundaryCondition bc);

/// Electromagnetic values -pi^2/(720 L^3), -pi^2/(720 L^4), -pi^2/(240 L^4).
EmReference em_reference(const PlateConfig& config);

/// Literal scalar constants -pi^2/(1440 L^3), -pi^2/(1440 L^4), -pi^2/(480 L^4),
/// against which the regularized pipeline is checked.
ReferenceValues scalar_reference(const PlateConfig& config);

/// Midpoint rule with `grid_points` cells for the integral of the improved energy
/// density over the gap, compared with total_energy.  Throws std::invalid_argument
/// for grid_points < 2.
DensityCheck integrated_density_check(const PlateConfig& config, BoundaryCondition bc,
                                      int grid_points);

/// Adaptive quadrature of the canonical density -(A + 2 s B) over
/// [margin L, (1 - margin) L].  Diverges like margin^-3 as the margin shrinks.
double canonical_density_integral(const PlateConfig& config, BoundaryCondition bc,
                                  double margin);

} // namespace plates::casimir
