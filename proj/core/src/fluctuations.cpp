#include "plates/fluctuations.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "plates/errors.hpp"
#include "plates/regsum.hpp"

namespace plates::fluctuations {

namespace {

const Real kPi = boost::math::constants::pi<Real>();

Real pow4(Real x) {
    const Real x2 = x * x;
    return x2 * x2;
}

} // namespace

InteriorPoint InteriorPoint::at_z(const PlateConfig& config, Real z) {
    if (!(z > 0 && z < config.separation())) {
        throw DomainError("InteriorPoint: z = " + std::to_string(static_cast<double>(z)) +
                          " is not strictly between the plates");
    }
    return InteriorPoint(z, kPi * z / Real(config.separation()));
}

InteriorPoint InteriorPoint::at_theta(const PlateConfig& config, Real theta) {
    if (!(theta > 0 && theta < Real(std::numbers::pi_v<double>))) {
        throw DomainError("InteriorPoint: theta = " + std::to_string(static_cast<double>(theta)) +
                          " is not strictly inside (0, pi)");
    }
    return InteriorPoint(theta * Real(config.separation()) / kPi, theta);
}

ABPair ab_values(const PlateConfig& config, const InteriorPoint& point) {
    const Real l4 = pow4(Real(config.separation()));
    return {kPi * kPi / (1440 * l4), kPi * kPi / (96 * l4) * regsum::f_theta(point.theta())};
}

Real phi_squared(BoundaryCondition bc, const PlateConfig& config, const InteriorPoint& point) {
    const Real s = sign_upper(bc);
    using std::sin;
    const Real L = config.separation();
    const Real sin_theta = sin(point.theta());
    return (1 - s * 3 / (sin_theta * sin_theta)) / (48 * L * L);
}

Real phi_squared_single_plate(BoundaryCondition bc, Real z) {
    using std::isfinite;
    if (!(z > 0) || !isfinite(z)) {
        throw DomainError("phi_squared_single_plate: z must be positive");
    }
    return -Real(sign_upper(bc)) / (16 * kPi * kPi * z * z);
}

FluctuationSet expectation_set(BoundaryCondition bc, const PlateConfig& config,
                               const InteriorPoint& point) {
    const Real s = sign_upper(bc);
    const auto [a, b] = ab_values(config, point);
    const Real sb = s * b;
    FluctuationSet set;
    set.phi2 = phi_squared(bc, config, point);
    set.phidot2 = -(a - sb);
    set.dzphi2 = -3 * (a + sb);
    set.grad_t_phi2 = 2 * (a - sb);
    set.dlambda_phi2 = 6 * sb;
    set.phi_d2z_phi = 3 * (a - sb);
    return set;
}

} // namespace plates::fluctuations
