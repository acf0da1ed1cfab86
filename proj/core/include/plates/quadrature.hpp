#pragma once

#include <functional>

namespace plates::quadrature {

using Integrand = std::function<double(double)>;

struct AdaptiveOptions {
    double relative_tolerance = 1e-12;
    double absolute_tolerance = 0.0;
    int max_intervals = 4000;
};

struct Result {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod on [a, b].  Throws QuadratureError if the
/// tolerance is not met within max_intervals subdivisions.
Result gauss_kronrod(const Integrand& f, double a, double b,
                     const AdaptiveOptions& options = {});

/// Integral over [a, inf) via x = a + scale * t / (1 - t).
Result semi_infinite(const Integrand& f, double a, double scale = 1.0,
                     const AdaptiveOptions& options = {});

/// Composite Simpson rule; `panels` is rounded up to the next power of two.
double simpson(const Integrand& f, double a, double b, int panels);

} // namespace plates::quadrature
