#include "plates/dimreg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "plates/errors.hpp"

namespace plates::dimreg {

namespace {

bool is_non_positive_integer(double x) { return x <= 0.0 && std::nearbyint(x) == x; }

// sin(pi x) with x reduced to [-1/2, 1/2] first; x - n is exact in binary floating point.
double sin_pi(double x) {
    const double n = std::nearbyint(x);
    const double s = std::sin(std::numbers::pi * (x - n));
    return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

} // namespace

double gamma_real(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("gamma_real: argument must be finite");
    }
    if (is_non_positive_integer(x)) {
        throw PoleError("gamma_real: pole at " + std::to_string(x));
    }
    if (x > 0.0) {
        return std::tgamma(x);
    }
    return std::numbers::pi / (sin_pi(x) * std::tgamma(1.0 - x));
}

double master_integral(const MasterIntegralSpec& spec) {
    if (!(spec.m_sq > 0.0)) {
        throw std::invalid_argument("master_integral: m_sq must be positive");
    }
    const double half_d = 0.5 * spec.d;
    const double numerator = gamma_real(spec.N - half_d);
    const double denominator = std::pow(4.0 * std::numbers::pi, half_d) * gamma_real(spec.N);
    return numerator / denominator * std::pow(spec.m_sq, half_d - spec.N);
}

} // namespace plates::dimreg
