#include "plates/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

#include "plates/casimir.hpp"
#include "plates/dimreg.hpp"
#include "plates/fluctuations.hpp"
#include "plates/oracle.hpp"
#include "plates/quadrature.hpp"
#include "plates/stress.hpp"

namespace plates::verify {

namespace {

using fluctuations::ABPair;
using fluctuations::FluctuationSet;
using fluctuations::InteriorPoint;

double relative_error(double value, double expected) {
    return std::abs(value - expected) / std::abs(expected);
}

double mixed_error(double value, double expected) {
    return std::abs(value - expected) / std::max(1.0, std::abs(expected));
}

std::string bc_name(BoundaryCondition bc) { return std::string(to_string(bc)); }

class Report {
public:
    void upper(std::string name, double measured, double tolerance) {
        results_.push_back({std::move(name), measured, tolerance, "<=",
                            std::isfinite(measured) && measured <= tolerance});
    }
    void lower(std::string name, double measured, double bound) {
        results_.push_back({std::move(name), measured, bound, ">=",
                            std::isfinite(measured) && measured >= bound});
    }
    // A check whose evaluation threw counts as failed with an infinite error.
    void guarded(const std::string& name, double tolerance, const std::function<double()>& body) {
        double measured = std::numeric_limits<double>::infinity();
        try {
            measured = body();
        } catch (const std::exception&) {
        }
        upper(name, measured, tolerance);
    }
    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

FluctuationSet local_set(BoundaryCondition bc, const PlateConfig& config,
                         const InteriorPoint& point, const Options& options) {
    auto set = fluctuations::expectation_set(bc, config, point);
    if (options.inject_neumann_sign_flip && bc == BoundaryCondition::Neumann) {
        const ABPair ab = fluctuations::ab_values(config, point);
        set.phi_d2z_phi = 6 * ab.a - set.phi_d2z_phi;
    }
    return set;
}

double radial_master_integral(double d, double N, double m_sq) {
    const double surface = d == 1.0 ? 2.0 : (d == 2.0 ? 2.0 * std::numbers::pi : 4.0 * std::numbers::pi);
    const double norm = surface / std::pow(2.0 * std::numbers::pi, d);
    const auto integrand = [&](double k) {
        return norm * std::pow(k, d - 1.0) / std::pow(k * k + m_sq, N);
    };
    return quadrature::semi_infinite(integrand, 0.0, std::sqrt(m_sq), {.relative_tolerance = 1e-13})
        .value;
}

void zeta_checks(Report& report) {
    for (int k : {1, 3}) {
        report.guarded("zeta(-" + std::to_string(k) + ") cutoff oracle", 1e-6, [k] {
            const auto fit = regsum::cutoff_sum_oracle(k);
            return std::abs(fit.finite_part - regsum::to_double(regsum::zeta_neg_int(k)));
        });
    }
}

void abel_checks(Report& report) {
    struct Case {
        int k;
        const char* name;
        double (*closed)(double);
    };
    const Case cases[] = {{1, "sum n cos(2n theta) Abel oracle", &regsum::trig_sum_n_cos<double>},
                          {3, "sum n^3 cos(2n theta) Abel oracle", &regsum::trig_sum_n3_cos<double>}};
    for (const auto& c : cases) {
        report.guarded(c.name, 1e-8, [&] {
            double worst = 0.0;
            for (int i = 1; i <= 30; ++i) {
                const double theta = 0.1 * i;
                worst = std::max(worst,
                                 mixed_error(regsum::abel_sum_oracle(c.k, theta), c.closed(theta)));
            }
            return worst;
        });
    }
}

void dimreg_checks(Report& report) {
    report.guarded("dimreg master integral vs radial quadrature", 1e-8, [] {
        struct Case {
            double d;
            double N;
        };
        const Case cases[] = {{2, 1.5}, {2, 2}, {2, 3}, {1, 1}, {1, 2.5}, {3, 2}, {3, 3}};
        double worst = 0.0;
        for (const auto& c : cases) {
            for (double m_sq : {0.5, 1.0, 4.0}) {
                const double closed = dimreg::master_integral({c.d, c.N, m_sq});
                worst = std::max(worst, relative_error(closed, radial_master_integral(c.d, c.N, m_sq)));
            }
        }
        return worst;
    });
}

void mode_checks(Report& report, const PlateConfig& config) {
    for (auto bc : kBoundaryConditions) {
        report.guarded("mode orthonormality " + bc_name(bc), 1e-10, [&] {
            return spectrum::orthonormality_check(bc, config, 20, 2048).distance_from_identity();
        });
    }
}

void oracle_checks(Report& report, const PlateConfig& config, const Options& options) {
    const double L = config.separation();
    std::vector<double> thetas;
    const int count = options.quick ? 3 : 5;
    for (int i = 0; i < count; ++i) {
        thetas.push_back(0.3 + (std::numbers::pi - 0.6) * i / (count - 1));
    }
    const auto schedule = options.schedule.value_or(oracle::default_schedule());
    for (auto bc : kBoundaryConditions) {
        for (auto obs : {oracle::Observable::Phi2, oracle::Observable::PhiDot2}) {
            const bool phi2 = obs == oracle::Observable::Phi2;
            const std::string name =
                std::string("mode-sum oracle ") + (phi2 ? "phi2 " : "phidot2 ") + bc_name(bc);
            report.guarded(name, phi2 ? 1e-4 : 1e-3, [&] {
                double worst = 0.0;
                for (double theta : thetas) {
                    const auto point = InteriorPoint::at_theta(config, theta);
                    const auto set = fluctuations::expectation_set(bc, config, point);
                    const double expected = to_double(phi2 ? set.phi2 : set.phidot2);
                    const auto fit = oracle::mode_sum_finite_part(
                        oracle::ModeSumSpec::make(bc, L, theta, obs, schedule));
                    worst = std::max(worst, relative_error(fit.finite_part, expected));
                }
                return worst;
            });
        }
    }
}

void tensor_checks(Report& report, const PlateConfig& config, const Options& options) {
    const auto grid = interior_grid(config.separation(), options.grid_points, options.margin);
    const double pressure = casimir::pressure(config);
    for (auto bc : kBoundaryConditions) {
        const std::string suffix = " " + bc_name(bc);
        double density_error = 0.0;
        double tzz_error = 0.0;
        double trace_ratio = 0.0;
        double contraction = 0.0;
        Real lo = 0;
        Real hi = 0;
        bool first = true;
        for (double z : grid) {
            const auto point = InteriorPoint::at_z(config, z);
            const auto ab = fluctuations::ab_values(config, point);
            const auto set = local_set(bc, config, point, options);
            const auto r = stress::stress_report(set);
            using std::abs;
            if (first) {
                lo = hi = r.energy_density_improved;
                first = false;
            }
            lo = std::min(lo, r.energy_density_improved);
            hi = std::max(hi, r.energy_density_improved);
            density_error = std::max(density_error,
                                     to_double(abs(r.energy_density_improved + ab.a) / ab.a));
            tzz_error = std::max(tzz_error, relative_error(to_double(r.t_zz), pressure));
            trace_ratio = std::max(trace_ratio,
                                   to_double(abs(r.trace_improved) / abs(r.trace_canonical)));
            contraction = std::max(
                contraction,
                to_double(abs(set.phidot2 - set.dzphi2 - set.grad_t_phi2 - set.dlambda_phi2) /
                          abs(set.dlambda_phi2)));
        }
        using std::abs;
        const Real mid = (lo + hi) / 2;
        report.upper("improved density spread" + suffix, to_double((hi - lo) / abs(mid)), 1e-12);
        report.upper("improved density equals -A" + suffix, density_error, 1e-12);
        report.upper("T_zz equals pressure" + suffix, tzz_error, 1e-12);
        report.upper("improved trace vanishes" + suffix, trace_ratio, 1e-12);
        report.upper("contraction identity" + suffix, contraction, 1e-25);
    }
}

void symmetry_checks(Report& report, const PlateConfig& config) {
    const Real pi = boost::math::constants::pi<Real>();
    const double lambda = 2.5;
    const PlateConfig scaled(config.separation() * lambda);
    for (auto bc : kBoundaryConditions) {
        const std::string suffix = " " + bc_name(bc);
        double mirror = 0.0;
        double scaling = 0.0;
        double duality = 0.0;
        for (int i = 1; i <= 30; ++i) {
            const Real theta = Real(0.1) * i;
            const auto p = InteriorPoint::at_theta(config, theta);
            const auto q = InteriorPoint::at_theta(config, pi - theta);
            const auto a = fluctuations::expectation_set(bc, config, p);
            const auto b = fluctuations::expectation_set(bc, config, q);
            const auto c = fluctuations::expectation_set(
                bc, scaled, InteriorPoint::at_z(scaled, p.z() * Real(lambda)));
            const auto ab = fluctuations::ab_values(config, p);
            const auto dual_set = fluctuations::expectation_set(dual(bc), config, p);
            const Real l4 = Real(lambda) * lambda * lambda * lambda;
            using std::abs;
            const auto rel = [](const Real& x, const Real& y) { return to_double(abs(x - y) / abs(y)); };
            for (auto field : {&FluctuationSet::phi2, &FluctuationSet::phidot2,
                               &FluctuationSet::dzphi2, &FluctuationSet::grad_t_phi2,
                               &FluctuationSet::dlambda_phi2, &FluctuationSet::phi_d2z_phi}) {
                mirror = std::max(mirror, rel(b.*field, a.*field));
                const Real factor = field == &FluctuationSet::phi2 ? Real(lambda) * lambda : l4;
                scaling = std::max(scaling, rel(c.*field * factor, a.*field));
            }
            // X_D(A, B) = X_N(A, -B): the B part of each derivative bilinear flips sign.
            const Real sb = sign_upper(bc) * ab.b;
            duality = std::max({duality, rel(dual_set.phidot2, -(ab.a + sb)),
                                rel(dual_set.dzphi2, -3 * (ab.a - sb)),
                                rel(dual_set.grad_t_phi2, 2 * (ab.a + sb)),
                                rel(dual_set.dlambda_phi2, -6 * sb),
                                rel(dual_set.phi_d2z_phi, 3 * (ab.a + sb))});
        }
        report.upper("mirror symmetry" + suffix, mirror, 1e-24);
        report.upper("L^-4 and L^-2 scaling" + suffix, scaling, 1e-12);
        report.upper("boundary-condition duality" + suffix, duality, 1e-24);
    }
}

void global_checks(Report& report, const PlateConfig& config) {
    const double L = config.separation();
    for (auto bc : kBoundaryConditions) {
        report.upper("total energy -pi^2/(1440 L^3) " + bc_name(bc),
                     relative_error(casimir::total_energy(config, bc),
                                    casimir::scalar_reference(config).energy_per_area),
                     1e-14);
    }
    // Central differences converge like (h/L)^2; the measured value is the error in those units.
    report.guarded("pressure = -dE/dL, error / (h/L)^2", 10.0, [&] {
        double worst = 0.0;
        for (double ratio : {1e-4, 1e-5}) {
            const double h = ratio * L;
            const double ep = casimir::total_energy(PlateConfig(L + h), BoundaryCondition::Dirichlet);
            const double em = casimir::total_energy(PlateConfig(L - h), BoundaryCondition::Dirichlet);
            const double error = relative_error(casimir::pressure(config), -(ep - em) / (2 * h));
            worst = std::max(worst, error / (ratio * ratio));
        }
        return worst;
    });
    {
        const auto em = casimir::em_reference(config);
        const auto scalar = casimir::scalar_reference(config);
        const double exact =
            std::max({relative_error(em.energy_per_area, 2.0 * scalar.energy_per_area),
                      relative_error(em.energy_density, 2.0 * scalar.energy_density),
                      relative_error(em.pressure, 2.0 * scalar.pressure)});
        report.upper("electromagnetic constants are twice the scalar constants", exact, 0.0);
        const double pipeline =
            std::max(relative_error(em.energy_per_area,
                                    2.0 * casimir::total_energy(config, BoundaryCondition::Dirichlet)),
                     relative_error(em.pressure, 2.0 * casimir::pressure(config)));
        report.upper("electromagnetic values are twice the computed scalar ones", pipeline, 1e-14);
    }
    {
        const auto form = stress::brown_maclay_form(L, stress::CoefficientSource::Scalar);
        const auto em_form = stress::brown_maclay_form(L, stress::CoefficientSource::Electromagnetic);
        const auto point = InteriorPoint::at_theta(config, Real(0.7));
        const auto set = fluctuations::expectation_set(BoundaryCondition::Dirichlet, config, point);
        const auto ab = fluctuations::ab_values(config, point);
        report.guarded("Brown-Maclay scalar form", 1e-12, [&] {
            if (!form.has_plate_form() || !form.is_symmetric() || !em_form.has_plate_form()) {
                return std::numeric_limits<double>::infinity();
            }
            return std::max({relative_error(form.t00(), to_double(stress::improved_energy_density(set, ab))),
                             relative_error(form.t_zz(), to_double(stress::t_zz(set, ab))),
                             relative_error(em_form.t00(), 2.0 * form.t00()),
                             relative_error(em_form.t_zz(), 2.0 * form.t_zz())});
        });
    }
}

void plate_limit_checks(Report& report, const PlateConfig& config, const Options& options) {
    const PlateConfig far(100.0);
    for (auto bc : kBoundaryConditions) {
        const std::string suffix = " " + bc_name(bc);
        report.guarded("single-plate limit" + suffix, 1e-4, [&] {
            const Real z = 0.01;
            const auto point = InteriorPoint::at_z(far, z);
            return relative_error(to_double(fluctuations::phi_squared(bc, far, point)),
                                  to_double(fluctuations::phi_squared_single_plate(bc, z)));
        });
        report.guarded("integrated improved density" + suffix, 1e-12, [&] {
            const auto check = casimir::integrated_density_check(config, bc, options.grid_points);
            return check.mismatch / std::abs(casimir::total_energy(config, bc));
        });
        double growth = 0.0;
        try {
            const double coarse = std::abs(casimir::canonical_density_integral(config, bc, 1e-2));
            const double middle = std::abs(casimir::canonical_density_integral(config, bc, 1e-3));
            const double fine = std::abs(casimir::canonical_density_integral(config, bc, 1e-4));
            growth = (middle > coarse && fine > middle) ? fine / coarse : 0.0;
        } catch (const std::exception&) {
            growth = 0.0;
        }
        report.lower("canonical density integral diverges" + suffix, growth, 10.0);
    }
}

} // namespace

std::vector<double> interior_grid(double length, int points, double margin) {
    if (points < 3) {
        throw std::invalid_argument("grid needs at least 3 points");
    }
    if (!(margin > 0.0 && margin < 0.5)) {
        throw std::invalid_argument("margin must lie strictly inside (0, 0.5)");
    }
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        grid.push_back(length * (margin + (1.0 - 2.0 * margin) * i / (points - 1)));
    }
    return grid;
}

std::vector<CheckResult> run_all(const Options& options) {
    const PlateConfig config(options.length);
    interior_grid(options.length, options.grid_points, options.margin);
    Report report;
    zeta_checks(report);
    abel_checks(report);
    dimreg_checks(report);
    mode_checks(report, config);
    oracle_checks(report, config, options);
    tensor_checks(report, config, options);
    symmetry_checks(report, config);
    global_checks(report, config);
    plate_limit_checks(report, config, options);
    return report.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

} // namespace plates::verify
