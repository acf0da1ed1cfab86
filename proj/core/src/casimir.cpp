#include "plates/casimir.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "plates/dimreg.hpp"
#include "plates/fluctuations.hpp"
#include "plates/quadrature.hpp"
#include "plates/regsum.hpp"
#include "plates/stress.hpp"

namespace plates::casimir {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

} // namespace

double total_energy(const PlateConfig& config, BoundaryCondition /*bc*/) {
    const double k1 = std::numbers::pi / config.separation();
    // Each mode sum term scales as n^3 through (m^2)^{d/2 - N} = (n^2 k1^2)^{3/2}.
    const double transverse = dimreg::master_integral({.d = 2.0, .N = -0.5, .m_sq = k1 * k1});
    return 0.5 * transverse * regsum::to_double(regsum::zeta_neg_int(3));
}

double pressure(const PlateConfig& config) {
    return 3.0 * total_energy(config, BoundaryCondition::Dirichlet) / config.separation();
}

GlobalResult global_result(const PlateConfig& config, BoundaryCondition bc) {
    return {total_energy(config, bc), pressure(config), bc};
}

EmReference em_reference(const PlateConfig& config) {
    const double L = config.separation();
    const double l3 = L * L * L;
    return {-kPi2 / (720.0 * l3), -kPi2 / (720.0 * l3 * L), -kPi2 / (240.0 * l3 * L)};
}

ReferenceValues scalar_reference(const PlateConfig& config) {
    const double L = config.separation();
    const double l3 = L * L * L;
    return {-kPi2 / (1440.0 * l3), -kPi2 / (1440.0 * l3 * L), -kPi2 / (480.0 * l3 * L)};
}

DensityCheck integrated_density_check(const PlateConfig& config, BoundaryCondition bc,
                                      int grid_points) {
    if (grid_points < 2) {
        throw std::invalid_argument("integrated_density_check: need at least 2 grid points");
    }
    const Real L = config.separation();
    const Real h = L / grid_points;
    Real integral = 0;
    for (int i = 0; i < grid_points; ++i) {
        const auto point = fluctuations::InteriorPoint::at_z(config, (i + Real(0.5)) * h);
        const auto set = fluctuations::expectation_set(bc, config, point);
        const auto ab = fluctuations::ab_values(config, point);
        integral += stress::improved_energy_density(set, ab) * h;
    }
    const double value = to_double(integral);
    return {value, std::abs(value - total_energy(config, bc))};
}

double canonical_density_integral(const PlateConfig& config, BoundaryCondition bc,
                                  double margin) {
    if (!(margin > 0.0 && margin < 0.5)) {
        throw std::invalid_argument("canonical_density_integral: margin must lie in (0, 1/2)");
    }
    const double L = config.separation();
    const auto density = [&](double z) {
        const auto point = fluctuations::InteriorPoint::at_z(config, z);
        return to_double(stress::canonical_t00(fluctuations::expectation_set(bc, config, point)));
    };
    return quadrature::gauss_kronrod(density, margin * L, (1.0 - margin) * L,
                                     {.relative_tolerance = 1e-10, .max_intervals = 20000})
        .value;
}

} // namespace plates::casimir
