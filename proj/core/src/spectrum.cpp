#include "plates/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "plates/errors.hpp"
#include "plates/quadrature.hpp"

namespace plates {

std::string_view to_string(BoundaryCondition bc) {
    return bc == BoundaryCondition::Dirichlet ? "dirichlet" : "neumann";
}

std::optional<BoundaryCondition> parse_boundary_condition(std::string_view text) {
    if (text == "dirichlet") {
        return BoundaryCondition::Dirichlet;
    }
    if (text == "neumann") {
        return BoundaryCondition::Neumann;
    }
    return std::nullopt;
}

PlateConfig::PlateConfig(double separation) : separation_(separation) {
    if (!(separation > 0.0) || !std::isfinite(separation)) {
        throw std::invalid_argument("PlateConfig: plate separation must be positive and finite");
    }
}

double PlateConfig::theta_at(double z) const { return std::numbers::pi * z / separation_; }

double PlateConfig::z_at(double theta) const { return theta * separation_ / std::numbers::pi; }

} // namespace plates

namespace plates::spectrum {

ModeIndex::ModeIndex(int n, std::array<double, 2> k_transverse)
    : n_(n), k_transverse_(k_transverse) {
    if (n < 1) {
        throw std::invalid_argument("ModeIndex: longitudinal quantum number must be >= 1");
    }
}

double k_n(const PlateConfig& config, int n) {
    if (n < 1) {
        throw std::invalid_argument("k_n: n must be >= 1");
    }
    return n * std::numbers::pi / config.separation();
}

double omega(const PlateConfig& config, const ModeIndex& mode) {
    const auto& kt = mode.k_transverse();
    return std::hypot(kt[0], kt[1], k_n(config, mode.n()));
}

namespace detail {

double profile_unchecked(BoundaryCondition bc, const PlateConfig& config, int n, double z) {
    const double L = config.separation();
    const double phase = k_n(config, n) * z;
    const double norm = std::sqrt(2.0 / L);
    return norm * (bc == BoundaryCondition::Dirichlet ? std::sin(phase) : std::cos(phase));
}

} // namespace detail

double mode_profile(BoundaryCondition bc, const PlateConfig& config, int n, double z) {
    if (!(z >= 0.0 && z <= config.separation())) {
        throw DomainError("mode_profile: z = " + std::to_string(z) + " lies outside [0, L]");
    }
    if (bc == BoundaryCondition::Dirichlet && (z == 0.0 || z == config.separation())) {
        return 0.0;
    }
    return detail::profile_unchecked(bc, config, n, z);
}

double GramMatrix::distance_from_identity() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < size_; ++i) {
        for (std::size_t j = 0; j < size_; ++j) {
            worst = std::max(worst, std::abs((*this)(i, j) - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

GramMatrix orthonormality_check(BoundaryCondition bc, const PlateConfig& config, int n_max,
                                int quadrature_points) {
    if (n_max < 1) {
        throw std::invalid_argument("orthonormality_check: n_max must be >= 1");
    }
    if (quadrature_points < 64) {
        throw std::invalid_argument("orthonormality_check: need at least 64 quadrature points");
    }
    const auto size = static_cast<std::size_t>(n_max);
    GramMatrix gram(size);
    const double L = config.separation();
    for (int n = 1; n <= n_max; ++n) {
        for (int m = n; m <= n_max; ++m) {
            const double value = quadrature::simpson(
                [&](double z) {
                    return mode_profile(bc, config, n, z) * mode_profile(bc, config, m, z);
                },
                0.0, L, quadrature_points);
            gram(static_cast<std::size_t>(n - 1), static_cast<std::size_t>(m - 1)) = value;
            gram(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(n - 1)) = value;
        }
    }
    return gram;
}

} // namespace plates::spectrum
