// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "plates/casimir.hpp"
#include "plates/fluctuations.hpp"
#include "plates/oracle.hpp"
#include "plates/regsum.hpp"
#include "plates/stress.hpp"

using namespace plates;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(const char* pattern, double a, double b) {
    char buffer[160];
    std::snprintf(buffer, sizeof buffer, pattern, a, b);
    return buffer;
}

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }

fluctuations::FluctuationSet set_at(BoundaryCondition bc, const PlateConfig& c, double z) {
    return fluctuations::expectation_set(bc, c, fluctuations::InteriorPoint::at_z(c, z));
}

Outcome total_energy() {
    const double e = casimir::total_energy(PlateConfig(1.0), BoundaryCondition::Dirichlet);
    const double err = rel(e, -kPi2 / 1440);
    const bool exact_zeta = regsum::zeta_neg_int(3) == regsum::Rational(1) / 120;
    return {err <= 1e-14 && exact_zeta, fmt("E(L=1) = %.17g, relative error %.3g <= 1e-14", e, err)};
}

Outcome pressure() {
    const PlateConfig c(1.0);
    const double p = casimir::pressure(c);
    double worst = rel(p, -kPi2 / 480);
    for (auto bc : kBoundaryConditions) {
        for (int i = 0; i < 20; ++i) {
            const double z = (i + 0.5) / 20.0;
            const auto point = fluctuations::InteriorPoint::at_z(c, z);
            const auto set = fluctuations::expectation_set(bc, c, point);
            const auto ab = fluctuations::ab_values(c, point);
            worst = std::max(worst, rel(to_double(stress::t_zz(set, ab)), p));
        }
    }
    return {worst <= 1e-12, fmt("p = %.17g; max relative deviation of T_zz %.3g <= 1e-12", p, worst)};
}

Outcome constancy() {
    const PlateConfig c(1.0);
    const double expected = -kPi2 / 1440;
    double spread = 0.0;
    double value_error = 0.0;
    for (auto bc : kBoundaryConditions) {
        Real lo = 0;
        Real hi = 0;
        for (int i = 0; i < 100; ++i) {
            const double z = (i + 0.5) / 100.0;
            const auto point = fluctuations::InteriorPoint::at_z(c, z);
            const auto e = stress::improved_energy_density(fluctuations::expectation_set(bc, c, point),
                                                           fluctuations::ab_values(c, point));
            lo = i == 0 ? e : std::min(lo, e);
            hi = i == 0 ? e : std::max(hi, e);
            value_error = std::max(value_error, rel(to_double(e), expected));
        }
        using std::abs;
        spread = std::max(spread, to_double((hi - lo) / abs(lo)));
    }
    return {spread < 1e-12 && value_error < 1e-12,
            fmt("relative spread %.3g < 1e-12, deviation from -A %.3g < 1e-12", spread, value_error)};
}

Outcome trace() {
    const PlateConfig c(1.0);
    double worst = 0.0;
    for (auto bc : kBoundaryConditions) {
        for (int i = 0; i < 100; ++i) {
            const auto t = stress::traces(set_at(bc, c, (i + 0.5) / 100.0));
            if (t.canonical != 0) {
                using std::abs;
                worst = std::max(worst, to_double(abs(t.improved) / abs(t.canonical)));
            }
        }
    }
    return {worst < 1e-12, fmt("max |trace_improved| / |trace_canonical| = %.3g < %.0e", worst, 1e-12)};
}

Outcome zeta_oracle() {
    const double e1 = std::abs(regsum::cutoff_sum_oracle(1).finite_part + 1.0 / 12);
    const double e3 = std::abs(regsum::cutoff_sum_oracle(3).finite_part - 1.0 / 120);
    return {e1 <= 1e-6 && e3 <= 1e-6, fmt("|zeta(-1) error| = %.3g, |zeta(-3) error| = %.3g (<= 1e-6)", e1, e3)};
}

Outcome trig_oracle() {
    double worst1 = 0.0;
    double worst3 = 0.0;
    for (int k = 1; k <= 30; ++k) {
        const double theta = 0.1 * k;
        worst1 = std::max(worst1, std::abs(regsum::abel_sum_oracle(1, theta) + 1.0 / (4 * std::pow(std::sin(theta), 2))));
        worst3 = std::max(worst3, std::abs(regsum::abel_sum_oracle(3, theta) - regsum::f_theta(theta) / 8));
    }
    return {worst1 <= 1e-8 && worst3 <= 1e-8,
            fmt("max abs error (n) %.3g, max abs error (n^3) %.3g (<= 1e-8)", worst1, worst3)};
}

Outcome mode_sum() {
    double phi2 = 0.0;
    double phidot2 = 0.0;
    const PlateConfig c(1.0);
    for (auto bc : kBoundaryConditions) {
        for (int i = 0; i < 5; ++i) {
            const double theta = 0.3 + (kPi - 0.6) * i / 4;
            const auto set = fluctuations::expectation_set(bc, c, fluctuations::InteriorPoint::at_theta(c, theta));
            const auto a = oracle::mode_sum_finite_part(
                oracle::ModeSumSpec::make(bc, 1.0, theta, oracle::Observable::Phi2));
            const auto b = oracle::mode_sum_finite_part(
                oracle::ModeSumSpec::make(bc, 1.0, theta, oracle::Observable::PhiDot2));
            phi2 = std::max(phi2, rel(a.finite_part, to_double(set.phi2)));
            phidot2 = std::max(phidot2, rel(b.finite_part, to_double(set.phidot2)));
        }
    }
    return {phi2 <= 1e-4 && phidot2 <= 1e-3,
            fmt("phi2 max rel error %.3g <= 1e-4, phidot2 max rel error %.3g <= 1e-3", phi2, phidot2)};
}

Outcome single_plate() {
    const PlateConfig far(100.0);
    double worst = 0.0;
    for (auto bc : kBoundaryConditions) {
        const double z = 0.01;
        const double two = to_double(fluctuations::phi_squared(bc, far, fluctuations::InteriorPoint::at_z(far, z)));
        const double one = -sign_upper(bc) / (16 * kPi2 * z * z);
        worst = std::max(worst, rel(two, one));
    }
    return {worst <= 1e-4, fmt("max rel difference %.3g <= %.0e", worst, 1e-4)};
}

Outcome em_factor() {
    bool exact = true;
    double pipeline = 0.0;
    for (double L : {0.5, 1.0, 2.0, 10.0}) {
        const PlateConfig c(L);
        const auto em = casimir::em_reference(c);
        const auto sc = casimir::scalar_reference(c);
        exact = exact && em.energy_per_area == 2 * sc.energy_per_area &&
                em.energy_density == 2 * sc.energy_density && em.pressure == 2 * sc.pressure;
        pipeline = std::max({pipeline, rel(em.energy_per_area, 2 * casimir::total_energy(c, BoundaryCondition::Dirichlet)),
                             rel(em.pressure, 2 * casimir::pressure(c))});
    }
    return {exact && pipeline <= 1e-14,
            fmt("bitwise equal to 2x scalar constants: %.0f; vs 2x computed values %.3g <= 1e-14",
                exact ? 1.0 : 0.0, pipeline)};
}

Outcome canonical_divergence() {
    const PlateConfig c(1.0);
    double worst_ratio = INFINITY;
    bool monotone = true;
    for (auto bc : kBoundaryConditions) {
        double previous = 0.0;
        double first = 0.0;
        for (double margin : {1e-2, 1e-3, 1e-4}) {
            const double value = std::abs(casimir::canonical_density_integral(c, bc, margin));
            monotone = monotone && value > previous;
            if (previous == 0.0) {
                first = value;
            }
            previous = value;
        }
        worst_ratio = std::min(worst_ratio, previous / first);
    }
    return {monotone && worst_ratio >= 10,
            fmt("monotone: %.0f; |I(1e-4)| / |I(1e-2)| = %.4g >= 10", monotone ? 1.0 : 0.0, worst_ratio)};
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"total scalar Casimir energy", total_energy},
        {"pressure and T_zz", pressure},
        {"improved energy density constancy", constancy},
        {"trace cancellation", trace},
        {"zeta oracle equivalence", zeta_oracle},
        {"trig-sum oracle equivalence", trig_oracle},
        {"mode-sum profile oracle", mode_sum},
        {"single-plate limit", single_plate},
        {"electromagnetic factor of two", em_factor},
        {"canonical-density divergence", canonical_divergence},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("threw: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += outcome.passed ? 0 : 1;
        std::printf("%s criterion %d (%s): %s [%.2f s]\n", outcome.passed ? "PASS" : "FAIL", index, name,
                    outcome.detail.c_str(), seconds);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
