#include "plates/stress.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "plates/errors.hpp"

namespace plates::stress {

namespace {

const Real kConsistencyTolerance = 1e-12;

void require_equal(const Real& value, const Real& expected, const char* what) {
    using std::abs;
    if (abs(value - expected) > kConsistencyTolerance * abs(expected)) {
        throw ConsistencyError(std::string(what) + ": got " +
                               std::to_string(static_cast<double>(value)) + ", expected " +
                               std::to_string(static_cast<double>(expected)));
    }
}

} // namespace

Real canonical_t00(const FluctuationSet& set) {
    return (set.phidot2 + set.dzphi2 + set.grad_t_phi2) / 2;
}

Real huggins_delta_t00(const FluctuationSet& set) {
    const Real phi_dt2_phi = -set.phidot2;
    return -(set.phidot2 + phi_dt2_phi - set.dlambda_phi2) / 3;
}

Real huggins_delta_t00(const FluctuationSet& set, const ABPair& ab) {
    using std::abs;
    const Real subtractive = -(canonical_t00(set) + ab.a);
    const Real on_shell = huggins_delta_t00(set);
    if (abs(subtractive - on_shell) > kConsistencyTolerance * std::max(abs(on_shell), ab.a)) {
        throw ConsistencyError("huggins_delta_t00: subtractive and on-shell forms disagree");
    }
    return subtractive;
}

Real improved_energy_density(const FluctuationSet& set, const ABPair& ab) {
    const Real value = canonical_t00(set) + huggins_delta_t00(set);
    require_equal(value, -ab.a, "improved_energy_density");
    return value;
}

namespace {

Real t_zz_unchecked(const FluctuationSet& set) {
    return 2 * set.dzphi2 / 3 - set.phi_d2z_phi / 3 + set.dlambda_phi2 / 6;
}

} // namespace

Real t_zz(const FluctuationSet& set, const ABPair& ab) {
    const Real value = t_zz_unchecked(set);
    require_equal(value, -3 * ab.a, "t_zz");
    return value;
}

Traces traces(const FluctuationSet& set) {
    const Real phi_dt2_phi = -set.phidot2;
    const Real phi_lapt_phi = -set.grad_t_phi2;
    const Real phi_box_phi = phi_dt2_phi - set.phi_d2z_phi - phi_lapt_phi;
    // eta^mn dT_mn = -(1/3)((d phi)^2 + phi box phi - 4 (d phi)^2)
    const Real huggins_trace = -(set.dlambda_phi2 + phi_box_phi - 4 * set.dlambda_phi2) / 3;
    const Real canonical = -set.dlambda_phi2;
    return {canonical, canonical + huggins_trace};
}

StressReport stress_report(const FluctuationSet& set) {
    StressReport report;
    report.energy_density_canonical = canonical_t00(set);
    report.huggins_00 = huggins_delta_t00(set);
    report.energy_density_improved = report.energy_density_canonical + report.huggins_00;
    report.t_zz = t_zz_unchecked(set);
    const auto tr = traces(set);
    report.trace_canonical = tr.canonical;
    report.trace_improved = tr.improved;
    return report;
}

bool TensorForm::has_plate_form(double relative_tolerance) const {
    const double c = coefficient();
    for (std::size_t m = 0; m < 4; ++m) {
        for (std::size_t n = 0; n < 4; ++n) {
            const double eta = (m == n) ? kMetricDiagonal[m] : 0.0;
            const double expected = c * (eta + 4.0 * normal[m] * normal[n]);
            if (std::abs(components[m][n] - expected) > relative_tolerance * std::abs(c)) {
                return false;
            }
        }
    }
    return true;
}

bool TensorForm::is_symmetric() const {
    for (std::size_t m = 0; m < 4; ++m) {
        for (std::size_t n = m + 1; n < 4; ++n) {
            if (components[m][n] != components[n][m]) {
                return false;
            }
        }
    }
    return true;
}

TensorForm brown_maclay_form(double separation, CoefficientSource source) {
    if (!(separation > 0.0)) {
        throw std::invalid_argument("brown_maclay_form: separation must be positive");
    }
    constexpr double pi2 = std::numbers::pi * std::numbers::pi;
    const double l4 = separation * separation * separation * separation;
    const double c = -pi2 / ((source == CoefficientSource::Scalar ? 1440.0 : 720.0) * l4);
    TensorForm form;
    for (std::size_t m = 0; m < 4; ++m) {
        for (std::size_t n = 0; n < 4; ++n) {
            const double eta = (m == n) ? kMetricDiagonal[m] : 0.0;
            form.components[m][n] = c * (eta + 4.0 * form.normal[m] * form.normal[n]);
        }
    }
    return form;
}

} // namespace plates::stress
