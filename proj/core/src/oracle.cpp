#include "plates/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "plates/errors.hpp"
#include "plates/finite_part_fit.hpp"
#include "plates/quadrature.hpp"
#include "plates/real.hpp"

namespace plates::oracle {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;
// -ln(1e-16)
constexpr double kTruncationExponent = 36.841361487904734;
// -ln(1e-32)
constexpr double kDefaultDecayExponent = 73.682722975809468;

int n_max_for(double length, const regsum::EpsilonSchedule& schedule, double exponent) {
    if (schedule.values.empty()) {
        throw std::invalid_argument("required_n_max: empty schedule");
    }
    return static_cast<int>(std::ceil(exponent * length / (std::numbers::pi * schedule.smallest()))) + 1;
}

} // namespace

int divergent_order(Observable observable) { return observable == Observable::Phi2 ? 2 : 4; }

regsum::EpsilonSchedule default_schedule() {
    return regsum::EpsilonSchedule::log_spaced(1e-3, 1e-2, 12, 4);
}

int required_n_max(double length, const regsum::EpsilonSchedule& schedule) {
    return n_max_for(length, schedule, kTruncationExponent);
}

int recommended_n_max(double length, const regsum::EpsilonSchedule& schedule) {
    return n_max_for(length, schedule, kDefaultDecayExponent);
}

ModeSumSpec ModeSumSpec::make(BoundaryCondition bc, double length, double theta,
                              Observable observable, regsum::EpsilonSchedule schedule) {
    ModeSumSpec spec;
    spec.bc = bc;
    spec.length = length;
    spec.theta = theta;
    spec.observable = observable;
    spec.n_max = recommended_n_max(length, schedule);
    spec.schedule = std::move(schedule);
    return spec;
}

namespace {

// Closed radial integral divided by the decay factor e^{-eps k}.
template <class T>
T transverse_prefactor(const T& k, const T& e, Observable observable) {
    if (observable == Observable::Phi2) {
        return 1 / e;
    }
    return k * k / e + 2 * k / (e * e) + 2 / (e * e * e);
}

} // namespace

long double transverse_integral(double k_n, double epsilon, Observable observable) {
    const long double k = k_n;
    const long double e = epsilon;
    return std::exp(-e * k) * transverse_prefactor(k, e, observable) / (2.0L * kPi);
}

regsum::FinitePartResult mode_sum_finite_part(const ModeSumSpec& spec) {
    static_cast<void>(PlateConfig(spec.length)); // validates the separation
    if (!(spec.theta > 0.0 && spec.theta < std::numbers::pi)) {
        throw DomainError("mode_sum_finite_part: theta must lie strictly inside (0, pi)");
    }
    const int order = divergent_order(spec.observable);
    const auto& eps_values = spec.schedule.values;
    spec.schedule.validate(static_cast<std::size_t>(order + 1 + spec.schedule.fit_basis_degree));

    const long double decay = spec.schedule.smallest() * spec.n_max * kPi / spec.length;
    if (!(decay > kTruncationExponent)) {
        throw TruncationError("mode_sum_finite_part: n_max = " + std::to_string(spec.n_max) +
                              " leaves e^{-eps k_n} above 1e-16; need at least " +
                              std::to_string(required_n_max(spec.length, spec.schedule)));
    }

    using std::cos;
    using std::exp;
    const Real pi = boost::math::constants::pi<Real>();
    const Real L = spec.length;
    const Real theta = spec.theta;
    const Real s = sign_upper(spec.bc);
    std::vector<Real> angular(static_cast<std::size_t>(spec.n_max));
    for (int n = 1; n <= spec.n_max; ++n) {
        angular[static_cast<std::size_t>(n - 1)] = 1 - s * cos(2 * n * theta);
    }

    std::vector<Real> samples;
    samples.reserve(eps_values.size());
    for (double eps : eps_values) {
        const Real e = eps;
        const Real step = exp(-e * pi / L);
        Real decay_n = 1;
        Real sum = 0;
        for (int n = 1; n <= spec.n_max; ++n) {
            decay_n *= step;
            sum += angular[static_cast<std::size_t>(n - 1)] * decay_n *
                   transverse_prefactor(Real(n * pi / L), e, spec.observable);
        }
        samples.push_back(sum / (4 * pi * L));
    }

    return regsum::fit_finite_part(
        eps_values, samples,
        {.divergent_order = order, .positive_degree = spec.schedule.fit_basis_degree});
}

TransverseCheck transverse_integral_unit_test(double k_n, double epsilon, Observable observable) {
    if (!(k_n > 0.0) || !(epsilon > 0.0)) {
        throw std::invalid_argument("transverse_integral_unit_test: k_n and epsilon must be positive");
    }
    const auto integrand = [&](double q) {
        const double w = std::hypot(q, k_n);
        const double radial = q / (2.0 * std::numbers::pi);
        const double decay = std::exp(-epsilon * w);
        return observable == Observable::Phi2 ? radial * decay / w : radial * w * decay;
    };
    const auto result =
        quadrature::semi_infinite(integrand, 0.0, 1.0 / epsilon, {.relative_tolerance = 1e-13});
    return {static_cast<double>(transverse_integral(k_n, epsilon, observable)), result.value};
}

} // namespace plates::oracle
