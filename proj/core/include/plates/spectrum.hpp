#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace plates {

enum class BoundaryCondition { Dirichlet, Neumann };

/// Resolves the upper/lower sign convention used throughout the closed forms:
/// every "+/-" is sign_upper(bc) times its upper-sign coefficient, every "-/+" is
/// -sign_upper(bc) times it.  Dirichlet takes the upper sign.
constexpr int sign_upper(BoundaryCondition bc) {
    return bc == BoundaryCondition::Dirichlet ? +1 : -1;
}

constexpr BoundaryCondition dual(BoundaryCondition bc) {
    return bc == BoundaryCondition::Dirichlet ? BoundaryCondition::Neumann
                                              : BoundaryCondition::Dirichlet;
}

std::string_view to_string(BoundaryCondition bc);
std::optional<BoundaryCondition> parse_boundary_condition(std::string_view text);

inline constexpr std::array<BoundaryCondition, 2> kBoundaryConditions = {
    BoundaryCondition::Dirichlet, BoundaryCondition::Neumann};

/// Two infinite parallel plates at z = 0 and z = L.
class PlateConfig {
public:
    /// Throws std::invalid_argument unless separation is positive and finite.
    explicit PlateConfig(double separation);

    double separation() const { return separation_; }
    /// theta = pi z / L.
    double theta_at(double z) const;
    double z_at(double theta) const;

private:
    double separation_;
};

} // namespace plates

namespace plates::spectrum {

class ModeIndex {
public:
    /// Throws std::invalid_argument for n < 1; the constant Neumann mode n = 0 is excluded.
    ModeIndex(int n, std::array<double, 2> k_transverse = {0.0, 0.0});

    int n() const { return n_; }
    const std::array<double, 2>& k_transverse() const { return k_transverse_; }

private:
    int n_;
    std::array<double, 2> k_transverse_;
};

/// Longitudinal wavenumber n pi / L.
double k_n(const PlateConfig& config, int n);

/// sqrt(|k_T|^2 + k_n^2).
double omega(const PlateConfig& config, const ModeIndex& mode);

/// Longitudinal factor of the orthonormal mode: sqrt(2/L) sin(k_n z) for Dirichlet,
/// sqrt(2/L) cos(k_n z) for Neumann.  Throws DomainError for z outside [0, L].
double mode_profile(BoundaryCondition bc, const PlateConfig& config, int n, double z);

class GramMatrix {
public:
    explicit GramMatrix(std::size_t size) : size_(size), data_(size * size, 0.0) {}

    std::size_t size() const { return size_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

    /// max |G - I| over all entries.
    double distance_from_identity() const;

private:
    std::size_t size_;
    std::vector<double> data_;
};

/// G_{nn'} = int_0^L mode_profile(n) mode_profile(n') dz for n, n' = 1..n_max, by
/// composite Simpson with a power-of-two panel count >= quadrature_points.
GramMatrix orthonormality_check(BoundaryCondition bc, const PlateConfig& config, int n_max,
                                int quadrature_points);

namespace detail {
/// mode_profile without the range check, for derivative stencils that straddle a plate.
double profile_unchecked(BoundaryCondition bc, const PlateConfig& config, int n, double z);
} // namespace detail

} // namespace plates::spectrum
