#pragma once

// Brute-force reconstruction of local expectation values from raw mode sums.
//
// Each longitudinal mode carries a transverse integral that is regulated by a
// weight e^{-eps omega} and done in closed radial form (k dk = omega d omega):
//
//   phi2:     int d^2k/(2 pi)^2 e^{-eps w} / w = e^{-eps k_n} / (2 pi eps)
//   phidot2:  int d^2k/(2 pi)^2 w e^{-eps w}   = e^{-eps k_n} (k_n^2/eps + 2 k_n/eps^2 + 2/eps^3) / (2 pi)
//
// The longitudinal sum (1/2L) sum_n (1 - s cos 2 n theta) (...) is then taken term
// by term up to n_max.  Its small-eps expansion is a Laurent series whose negative
// powers stop at eps^-2 for phi2 (leading 1/(4 pi^2 eps^2)) and at eps^-4 for phidot2
// (the second eps derivative of the phi2 structure), so the fit basis is
// {eps^-p, ..., eps^-1, 1, eps, ..., eps^degree} with p = 2 or 4.  The constant
// coefficient is the finite part.  The n = 0 Neumann mode is excluded throughout.

#include "plates/regsum.hpp"
#include "plates/spectrum.hpp"

namespace plates::oracle {

enum class Observable { Phi2, PhiDot2 };

/// Highest negative power of eps in the small-eps expansion.
int divergent_order(Observable observable);

/// 12 log-spaced values in [1e-3, 1e-2] with fit degree 4.
regsum::EpsilonSchedule default_schedule();

struct ModeSumSpec {
    BoundaryCondition bc = BoundaryCondition::Dirichlet;
    double length = 1.0;
    double theta = 1.5707963267948966;
    int n_max = 0;
    regsum::EpsilonSchedule schedule = default_schedule();
    Observable observable = Observable::Phi2;

    /// Spec with n_max = recommended_n_max(length, schedule).
    static ModeSumSpec make(BoundaryCondition bc, double length, double theta,
                            Observable observable,
                            regsum::EpsilonSchedule schedule = default_schedule());
};

/// Smallest n_max with e^{-eps_min n_max pi / L} < 1e-16.  Anything less is rejected.
int required_n_max(double length, const regsum::EpsilonSchedule& schedule);

/// n_max with e^{-eps_min n_max pi / L} < 1e-32, enough for phidot2 to 1e-3.
int recommended_n_max(double length, const regsum::EpsilonSchedule& schedule);

/// Throws TruncationError if n_max is too small for the smallest scheduled eps,
/// std::invalid_argument/DomainError for a bad length, theta or schedule, and
/// FitError if the finite-part fit is singular.
regsum::FinitePartResult mode_sum_finite_part(const ModeSumSpec& spec);

/// Closed-form cutoff transverse integral for one longitudinal wavenumber.
long double transverse_integral(double k_n, double epsilon, Observable observable);

struct TransverseCheck {
    double closed = 0.0;
    double quadrature = 0.0;
};

/// Closed form next to an adaptive radial quadrature of the same integrand.
/// Throws QuadratureError if the quadrature does not converge.
TransverseCheck transverse_integral_unit_test(double k_n, double epsilon, Observable observable);

} // namespace plates::oracle
