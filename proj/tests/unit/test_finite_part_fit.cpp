#include <doctest.h>

#include <cmath>
#include <vector>

#include "plates/errors.hpp"
#include "plates/finite_part_fit.hpp"

using namespace plates::regsum;

namespace {

std::vector<long double> sample(const std::vector<double>& eps, auto&& f) {
    std::vector<long double> out;
    for (double e : eps) {
        out.push_back(f(static_cast<long double>(e)));
    }
    return out;
}

} // namespace

TEST_CASE("exact Laurent polynomial is recovered") {
    const auto eps = EpsilonSchedule::log_spaced(1e-2, 1e-1, 10).values;
    const auto samples = sample(eps, [](long double e) {
        return 3.0L / (e * e) - 0.5L / e + 0.25L + 2.0L * e - 7.0L * e * e;
    });
    const auto fit = fit_finite_part(eps, samples, {.divergent_order = 2, .positive_degree = 2});
    CHECK(fit.finite_part == doctest::Approx(0.25).epsilon(1e-10));
    REQUIRE(fit.divergent_coeffs.size() == 2);
    CHECK(fit.divergent_coeffs[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(fit.divergent_coeffs[1] == doctest::Approx(-0.5).epsilon(1e-10));
    CHECK(fit.fit_residual < 1e-15);
}

TEST_CASE("quad-precision samples fit to quad accuracy") {
    const auto eps = EpsilonSchedule::log_spaced(1e-3, 1e-2, 12).values;
    std::vector<plates::Real> samples;
    for (double e : eps) {
        const plates::Real x = e;
        samples.push_back(6 / (x * x * x * x) + plates::Real(1) / 120 - x * x / 504);
    }
    const auto fit = fit_finite_part(eps, samples, {.divergent_order = 4, .positive_degree = 2});
    CHECK(std::abs(fit.finite_part - 1.0 / 120.0) < 1e-14);
}

TEST_CASE("unmodelled curvature shows up in the residual") {
    const auto eps = EpsilonSchedule::log_spaced(0.1, 1.0, 12).values;
    const auto samples = sample(eps, [](long double e) { return 1.0L / e + std::exp(3.0L * e); });
    const auto fit = fit_finite_part(eps, samples, {.divergent_order = 1, .positive_degree = 1});
    CHECK(fit.fit_residual > 1e-4);
}

TEST_CASE("fit input validation") {
    const std::vector<double> eps{0.1, 0.05};
    const std::vector<long double> samples{1.0L, 2.0L, 3.0L};
    CHECK_THROWS_AS(fit_finite_part(eps, samples, {.divergent_order = 1, .positive_degree = 0}),
                    std::invalid_argument);
    const std::vector<long double> two{1.0L, 2.0L};
    CHECK_THROWS_AS(fit_finite_part(eps, two, {.divergent_order = 2, .positive_degree = 2}),
                    std::invalid_argument);
}

TEST_CASE("numerically singular designs are rejected") {
    // Nearly coincident abscissae make neighbouring powers indistinguishable.
    const std::vector<double> eps{0.5, 0.5 * (1 + 1e-13), 0.5 * (1 + 2e-13), 0.5 * (1 + 3e-13)};
    const std::vector<long double> samples{1.0L, 1.0L, 1.0L, 1.0L};
    CHECK_THROWS_AS(fit_finite_part(eps, samples, {.divergent_order = 1, .positive_degree = 2}),
                    plates::FitError);
}
