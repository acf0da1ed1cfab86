#pragma once

// Regularized values of the divergent sums  sum n^k  and  sum n^k cos(2 n theta),
// together with two numerical oracles that reach the same finite parts by
// different routes: an exponential cutoff with a least-squares finite-part fit,
// and Abel summation with Richardson extrapolation in (1 - r).

#include <cstddef>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace plates::regsum {

using Rational = boost::multiprecision::cpp_rational;

/// Bernoulli number B_n with B_1 = -1/2, from the exact recurrence
/// sum_{j=0}^{n} C(n+1, j) B_j = 0.
Rational bernoulli(unsigned n);

/// zeta(-k) = (-1)^k B_{k+1} / (k + 1).  For k >= 1 this is -B_{k+1}/(k+1).
Rational zeta_neg_int(unsigned k);

double to_double(const Rational& value);

// The closed forms below are instantiated for double, long double and plates::Real.

/// f(theta) = 3/sin^4(theta) - 2/sin^2(theta).  Throws DomainError at theta in {0, pi}
/// or outside (0, pi).
template <typename T>
T f_theta(T theta);

/// Regularized sum n cos(2 n theta) = -1 / (4 sin^2 theta).
template <typename T>
T trig_sum_n_cos(T theta);

/// Regularized sum n^3 cos(2 n theta) = f(theta) / 8.
template <typename T>
T trig_sum_n3_cos(T theta);

struct FinitePartResult {
    double finite_part = 0.0;
    /// Coefficients of eps^-(p), ..., eps^-1 in that order.
    std::vector<double> divergent_coeffs;
    /// RMS of the fit residuals relative to the fitted samples.
    double fit_residual = 0.0;
};

struct EpsilonSchedule {
    std::vector<double> values;
    /// Highest positive power of eps in the fit basis.
    int fit_basis_degree = 2;

    /// Default cutoff-sum schedule: 12 log-spaced points in [1e-3, 1e-1], degree 2.
    static EpsilonSchedule standard();
    /// `count` log-spaced values from `largest` down to `smallest`.
    static EpsilonSchedule log_spaced(double smallest, double largest, std::size_t count,
                                      int fit_basis_degree = 2);

    /// Throws std::invalid_argument unless all values are positive, strictly
    /// decreasing and at least `basis_size` in number.
    void validate(std::size_t basis_size) const;

    double smallest() const { return values.back(); }
    double largest() const { return values.front(); }
};

struct AbelOptions {
    /// Radii r < 1, strictly increasing.
    std::vector<double> radii;
    /// Largest relative change between the last two diagonal extrapolants
    /// that is still accepted as converged.
    double divergence_tolerance = 1e-6;

    /// r_j = 1 - 2^-j for j = 5..12.
    static AbelOptions standard();
};

/// Abel limit of sum_{n>=1} n^k r^n cos(2 n theta) as r -> 1-, for k in {0, 1, 3}.
/// With theta absent the cosine factor is dropped.  Each partial value is the exact
/// geometric-series closed form; the limit comes from polynomial extrapolation in
/// (1 - r).  Throws ExtrapolationError when the extrapolants do not settle.
double abel_sum_oracle(int k, std::optional<double> theta,
                       const AbelOptions& options = AbelOptions::standard());

/// Finite part of S(eps) = sum n^k e^{-eps n} for odd positive k.  S is evaluated
/// from its closed form x A_k(x) / (1 - x)^{k+1}, x = e^{-eps}, with A_k the Eulerian
/// polynomial, then fitted by ordinary least squares on the basis
/// {eps^-(k+1), ..., eps^-1, 1, eps, ..., eps^degree}.
FinitePartResult cutoff_sum_oracle(int k,
                                   const EpsilonSchedule& schedule = EpsilonSchedule::standard());

} // namespace plates::regsum
