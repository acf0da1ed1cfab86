#pragma once

// Closed-form vacuum expectation values of field bilinears between the plates.
//
// With theta = pi z / L and s = sign_upper(bc):
//
//   A = pi^2 / (1440 L^4)                 (position independent)
//   B = pi^2 / (96 L^4) * f(theta)        f = 3/sin^4 - 2/sin^2
//
//   <phi^2>            = (1 - 3 s / sin^2 theta) / (48 L^2)
//   <phidot^2>         = -(A - s B)
//   <(d_z phi)^2>      = -3 (A + s B)
//   <(grad_T phi)^2>   =  2 (A - s B)
//   <(d_lambda phi)^2> =  6 s B
//   <phi d_z^2 phi>    =  3 (A - s B)
//
// All quantities are carried in plates::Real: near the plates B exceeds A by
// many decades and the tensor assembly downstream cancels the B parts.

#include "plates/real.hpp"
#include "plates/spectrum.hpp"

namespace plates::fluctuations {

using plates::Real;

/// A point strictly between the plates.  theta is authoritative; z is kept so that
/// output tables are self-describing.
class InteriorPoint {
public:
    /// Throws DomainError unless 0 < z < L.
    static InteriorPoint at_z(const PlateConfig& config, Real z);
    /// Throws DomainError unless 0 < theta < pi.
    static InteriorPoint at_theta(const PlateConfig& config, Real theta);

    Real z() const { return z_; }
    Real theta() const { return theta_; }

private:
    InteriorPoint(Real z, Real theta) : z_(z), theta_(theta) {}

    Real z_;
    Real theta_;
};

struct ABPair {
    Real a = 0;
    Real b = 0;
};

struct FluctuationSet {
    Real phi2 = 0;
    Real phidot2 = 0;
    Real dzphi2 = 0;
    Real grad_t_phi2 = 0;
    Real dlambda_phi2 = 0;
    /// Independent of dzphi2 pointwise; the two are related only after integrating
    /// by parts over the whole gap.
    Real phi_d2z_phi = 0;
};

ABPair ab_values(const PlateConfig& config, const InteriorPoint& point);

Real phi_squared(BoundaryCondition bc, const PlateConfig& config, const InteriorPoint& point);

/// Outside a single plate: -s / (16 pi^2 z^2).  Throws DomainError for z <= 0.
Real phi_squared_single_plate(BoundaryCondition bc, Real z);

FluctuationSet expectation_set(BoundaryCondition bc, const PlateConfig& config,
                               const InteriorPoint& point);

} // namespace plates::fluctuations
