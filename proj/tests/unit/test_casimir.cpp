#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "plates/casimir.hpp"

using namespace plates;
using namespace plates::casimir;

namespace {
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
}

TEST_CASE("total energy") {
    for (auto bc : kBoundaryConditions) {
        CHECK(total_energy(PlateConfig(1.0), bc) == doctest::Approx(-kPi2 / 1440).epsilon(1e-14));
        CHECK(total_energy(PlateConfig(2.0), bc) == doctest::Approx(-kPi2 / 11520).epsilon(1e-14));
    }
    CHECK(total_energy(PlateConfig(1.0), BoundaryCondition::Dirichlet) ==
          doctest::Approx(-6.85389e-3).epsilon(1e-5));
    CHECK(total_energy(PlateConfig(1.0), BoundaryCondition::Dirichlet) ==
          total_energy(PlateConfig(1.0), BoundaryCondition::Neumann));
}

TEST_CASE("pipeline total energy equals the literal constant") {
    for (double L : {0.5, 1.0, 2.0, 10.0}) {
        const PlateConfig c(L);
        const double literal = scalar_reference(c).energy_per_area;
        CHECK(std::abs(total_energy(c, BoundaryCondition::Dirichlet) - literal) <= 1e-14 * std::abs(literal));
    }
}

TEST_CASE("pressure") {
    CHECK(pressure(PlateConfig(1.0)) == doctest::Approx(-kPi2 / 480).epsilon(1e-14));
    CHECK(pressure(PlateConfig(1.0)) == doctest::Approx(-2.05617e-2).epsilon(1e-5));
    CHECK(pressure(PlateConfig(3.0)) == doctest::Approx(-kPi2 / 38880).epsilon(1e-14));
    const auto g = global_result(PlateConfig(1.0), BoundaryCondition::Neumann);
    CHECK(g.bc == BoundaryCondition::Neumann);
    CHECK(g.pressure == pressure(PlateConfig(1.0)));
    CHECK(g.energy_per_area == total_energy(PlateConfig(1.0), BoundaryCondition::Neumann));
}

TEST_CASE("pressure is minus the derivative of the energy") {
    const auto E = [](double L) { return total_energy(PlateConfig(L), BoundaryCondition::Dirichlet); };
    const double L = 1.0;
    const double h = 1e-5;
    CHECK(-(E(L + h) - E(L - h)) / (2 * h) == doctest::Approx(pressure(PlateConfig(L))).epsilon(1e-8));
    for (double Lx : {0.5, 2.0, 5.0}) {
        for (double ratio : {1e-4, 1e-5}) {
            const double hx = ratio * Lx;
            const double fd = -(E(Lx + hx) - E(Lx - hx)) / (2 * hx);
            const double p = pressure(PlateConfig(Lx));
            CHECK(std::abs(fd - p) / std::abs(p) < 10 * ratio * ratio);
        }
    }
}

TEST_CASE("electromagnetic reference") {
    const auto em = em_reference(PlateConfig(1.0));
    CHECK(em.energy_per_area == doctest::Approx(-kPi2 / 720).epsilon(1e-15));
    CHECK(em.energy_per_area == doctest::Approx(-1.37078e-2).epsilon(1e-5));
    CHECK(em.energy_density == doctest::Approx(-kPi2 / 720).epsilon(1e-15));
    CHECK(em.pressure == doctest::Approx(-kPi2 / 240).epsilon(1e-15));
    CHECK(em_reference(PlateConfig(2.0)).energy_per_area == doctest::Approx(-kPi2 / 5760).epsilon(1e-15));
    for (double L : {0.3, 1.0, 2.0, 7.0}) {
        const auto e = em_reference(PlateConfig(L));
        const auto s = scalar_reference(PlateConfig(L));
        CHECK(e.energy_per_area == 2 * s.energy_per_area);
        CHECK(e.energy_density == 2 * s.energy_density);
        CHECK(e.pressure == 2 * s.pressure);
    }
}

TEST_CASE("integrated improved density reproduces the total energy") {
    for (double L : {0.5, 1.0, 2.0, 10.0}) {
        for (auto bc : kBoundaryConditions) {
            const PlateConfig c(L);
            const auto check = integrated_density_check(c, bc, 64);
            CHECK(check.mismatch < 1e-12 * std::abs(total_energy(c, bc)));
        }
    }
    const auto one = integrated_density_check(PlateConfig(1.0), BoundaryCondition::Neumann, 10);
    CHECK(one.integral == doctest::Approx(-kPi2 / 1440).epsilon(1e-14));
    const auto five = integrated_density_check(PlateConfig(5.0), BoundaryCondition::Dirichlet, 10);
    // -A L with A = pi^2 / (1440 * 5^4).
    CHECK(five.integral == doctest::Approx(-kPi2 / 180000).epsilon(1e-14));
    CHECK_THROWS_AS(integrated_density_check(PlateConfig(1.0), BoundaryCondition::Dirichlet, 1),
                    std::invalid_argument);
}

TEST_CASE("canonical density integral diverges as the margin shrinks") {
    for (auto bc : kBoundaryConditions) {
        const PlateConfig c(1.0);
        double previous = 0.0;
        for (double margin : {1e-2, 3e-3, 1e-3, 3e-4, 1e-4}) {
            const double value = std::abs(canonical_density_integral(c, bc, margin));
            CHECK(value > previous);
            previous = value;
        }
        const double coarse = std::abs(canonical_density_integral(c, bc, 1e-2));
        CHECK(previous >= 10 * coarse);
        // The near-plate growth goes like margin^-3.
        const double r = canonical_density_integral(c, bc, 1e-4) / canonical_density_integral(c, bc, 1e-3);
        CHECK(r == doctest::Approx(1000.0).epsilon(1e-2));
    }
    CHECK_THROWS_AS(canonical_density_integral(PlateConfig(1.0), BoundaryCondition::Dirichlet, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(canonical_density_integral(PlateConfig(1.0), BoundaryCondition::Dirichlet, 0.5),
                    std::invalid_argument);
}
