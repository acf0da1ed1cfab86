#pragma once

// Energy-momentum tensor expectation values assembled from a FluctuationSet.
//
// Canonical:  T0_mn = d_m phi d_n phi - (1/2) eta_mn (d phi)^2
// Huggins:    dT_mn = -(1/6)(d_m d_n - eta_mn d^2) phi^2
//                   = -(1/3)(d_m phi d_n phi + phi d_m d_n phi - eta_mn (d phi)^2)   on shell
// Metric eta = diag(1, -1, -1, -1), plate normal n = (0; 0, 0, 1).

#include <array>

#include "plates/fluctuations.hpp"

namespace plates::stress {

using fluctuations::ABPair;
using fluctuations::FluctuationSet;
using fluctuations::Real;

struct StressReport {
    Real energy_density_canonical = 0;
    Real huggins_00 = 0;
    Real energy_density_improved = 0;
    Real t_zz = 0;
    Real trace_canonical = 0;
    Real trace_improved = 0;
};

struct Traces {
    Real canonical = 0;
    Real improved = 0;
};

/// (1/2)(<phidot^2> + <(d_z phi)^2> + <(grad_T phi)^2>).
Real canonical_t00(const FluctuationSet& set);

/// Huggins 00 component from its on-shell form with <phi d_t^2 phi> = -<phidot^2>.
Real huggins_delta_t00(const FluctuationSet& set);

/// Huggins 00 component as -(canonical_t00 + A), i.e. whatever removes the position
/// dependence.  Throws ConsistencyError if it disagrees with the on-shell form.
Real huggins_delta_t00(const FluctuationSet& set, const ABPair& ab);

/// canonical_t00 + on-shell Huggins term.  Throws ConsistencyError unless the result
/// equals -A to 1e-12 relative.
Real improved_energy_density(const FluctuationSet& set, const ABPair& ab);

/// (2/3)<(d_z phi)^2> - (1/3)<phi d_z^2 phi> + (1/6)<(d phi)^2>.  Throws
/// ConsistencyError unless the result equals -3A to 1e-12 relative.
Real t_zz(const FluctuationSet& set, const ABPair& ab);

/// Canonical trace -<(d phi)^2> and the improved trace, whose Huggins part is built
/// from <(d phi)^2> and <phi d^2 phi>.  The latter uses <phi d_t^2 phi> = -<phidot^2>
/// and transverse homogeneity <phi grad_T^2 phi> = -<(grad_T phi)^2>, so it vanishes
/// only if the set obeys the field equation.
Traces traces(const FluctuationSet& set);

/// All components without consistency checks; suitable for tabulating profiles.
StressReport stress_report(const FluctuationSet& set);

enum class CoefficientSource { Scalar, Electromagnetic };

inline constexpr std::array<double, 4> kMetricDiagonal = {1.0, -1.0, -1.0, -1.0};
inline constexpr std::array<double, 4> kPlateNormal = {0.0, 0.0, 0.0, 1.0};

struct TensorForm {
    std::array<std::array<double, 4>, 4> components{};
    std::array<double, 4> normal = kPlateNormal;

    /// c recovered from the 00 entry.
    double coefficient() const { return components[0][0]; }
    double t00() const { return components[0][0]; }
    double t_zz() const { return components[3][3]; }

    /// Every entry equals c (eta_mn + 4 n_m n_n) with c from the 00 entry.
    bool has_plate_form(double relative_tolerance = 1e-15) const;
    bool is_symmetric() const;
};

/// c (eta_mn + 4 n_m n_n) with c = -pi^2/(1440 L^4) (scalar) or -pi^2/(720 L^4)
/// (electromagnetic).  Throws std::invalid_argument for L <= 0.
TensorForm brown_maclay_form(double separation, CoefficientSource source);

} // namespace plates::stress
