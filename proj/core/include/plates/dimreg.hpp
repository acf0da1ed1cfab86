#pragma once

namespace plates::dimreg {

/// Parameters of  int d^d k / (2 pi)^d  (k^2 + m^2)^-N.
struct MasterIntegralSpec {
    double d = 2.0;
    double N = 1.0;
    /// Mass-squared parameter, inverse length squared.  Must be positive.
    double m_sq = 1.0;
};

/// Gamma function on the real line.  Positive arguments use std::tgamma; negative
/// arguments use the reflection formula  Gamma(x) Gamma(1 - x) = pi / sin(pi x)
/// with an exact reduction of sin(pi x).  Throws PoleError at 0, -1, -2, ...
double gamma_real(double x);

/// Gamma(N - d/2) / ((4 pi)^{d/2} Gamma(N)) * (m^2)^{d/2 - N}, continued in d and N.
/// Throws std::invalid_argument for m_sq <= 0 and PoleError when either gamma
/// argument sits on a pole.
double master_integral(const MasterIntegralSpec& spec);

} // namespace plates::dimreg
