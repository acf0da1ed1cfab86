#include "plates/regsum.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "plates/errors.hpp"
#include "plates/finite_part_fit.hpp"
#include "plates/real.hpp"

namespace plates::regsum {

namespace mp = boost::multiprecision;

Rational bernoulli(unsigned n) {
    std::vector<Rational> b;
    b.reserve(n + 1);
    b.emplace_back(1);
    for (unsigned m = 1; m <= n; ++m) {
        // sum_{j<m} C(m+1, j) B_j + (m+1) B_m = 0
        Rational acc = 0;
        mp::cpp_int binom = 1; // C(m+1, 0)
        for (unsigned j = 0; j < m; ++j) {
            acc += Rational(binom) * b[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b.push_back(-acc / (m + 1));
    }
    return b[n];
}

Rational zeta_neg_int(unsigned k) {
    Rational value = bernoulli(k + 1) / (k + 1);
    return (k % 2 == 0) ? value : Rational(-value);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

namespace {

template <typename T>
T checked_sin_squared(T theta, const char* what) {
    using std::sin;
    // Upper bound is the double value of pi for both precisions so that a caller
    // passing std::numbers::pi hits the plate surface exactly.
    if (!(theta > T(0) && theta < T(std::numbers::pi_v<double>))) {
        throw DomainError(std::string(what) + ": theta must lie strictly inside (0, pi), got " +
                          std::to_string(static_cast<double>(theta)));
    }
    const T s = sin(theta);
    return s * s;
}

} // namespace

template <typename T>
T f_theta(T theta) {
    const T s2 = checked_sin_squared(theta, "f_theta");
    return (T(3) - T(2) * s2) / (s2 * s2);
}

template <typename T>
T trig_sum_n_cos(T theta) {
    const T s2 = checked_sin_squared(theta, "trig_sum_n_cos");
    return T(-1) / (T(4) * s2);
}

template <typename T>
T trig_sum_n3_cos(T theta) {
    return f_theta(theta) / T(8);
}

template double f_theta(double);
template long double f_theta(long double);
template Real f_theta(Real);
template double trig_sum_n_cos(double);
template long double trig_sum_n_cos(long double);
template Real trig_sum_n_cos(Real);
template double trig_sum_n3_cos(double);
template long double trig_sum_n3_cos(long double);
template Real trig_sum_n3_cos(Real);

EpsilonSchedule EpsilonSchedule::standard() { return log_spaced(1e-3, 1e-1, 12, 2); }

EpsilonSchedule EpsilonSchedule::log_spaced(double smallest, double largest, std::size_t count,
                                            int fit_basis_degree) {
    if (!(smallest > 0.0 && largest > smallest) || count < 2) {
        throw std::invalid_argument("log_spaced: need 0 < smallest < largest and count >= 2");
    }
    EpsilonSchedule schedule;
    schedule.fit_basis_degree = fit_basis_degree;
    schedule.values.reserve(count);
    const double lo = std::log(smallest);
    const double hi = std::log(largest);
    for (std::size_t i = 0; i < count; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(count - 1);
        schedule.values.push_back(std::exp(hi + (lo - hi) * t));
    }
    schedule.values.front() = largest;
    schedule.values.back() = smallest;
    return schedule;
}

void EpsilonSchedule::validate(std::size_t basis_size) const {
    if (fit_basis_degree < 0) {
        throw std::invalid_argument("EpsilonSchedule: fit_basis_degree must be non-negative");
    }
    if (values.size() < basis_size) {
        throw std::invalid_argument("EpsilonSchedule: " + std::to_string(values.size()) +
                                    " values cannot determine " + std::to_string(basis_size) +
                                    " basis coefficients");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
            throw std::invalid_argument("EpsilonSchedule: values must be positive and finite");
        }
        if (i > 0 && !(values[i] < values[i - 1])) {
            throw std::invalid_argument("EpsilonSchedule: values must be strictly decreasing");
        }
    }
}

AbelOptions AbelOptions::standard() {
    AbelOptions options;
    for (int j = 5; j <= 12; ++j) {
        options.radii.push_back(1.0 - std::ldexp(1.0, -j));
    }
    return options;
}

namespace {

using complex_ld = std::complex<long double>;

// sum_{n>=1} n^k w^n for |w| < 1.
complex_ld polylog_neg(int k, complex_ld w) {
    const complex_ld one(1.0L, 0.0L);
    const complex_ld q = one - w;
    switch (k) {
    case 0:
        return w / q;
    case 1:
        return w / (q * q);
    case 3:
        return w * (one + 4.0L * w + w * w) / (q * q * q * q);
    default:
        throw std::invalid_argument("abel_sum_oracle: k must be 0, 1 or 3");
    }
}

} // namespace

double abel_sum_oracle(int k, std::optional<double> theta, const AbelOptions& options) {
    const auto& radii = options.radii;
    if (radii.size() < 4) {
        throw std::invalid_argument("abel_sum_oracle: need at least 4 radii");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
            throw std::invalid_argument("abel_sum_oracle: radii must increase strictly inside (0, 1)");
        }
    }

    const std::size_t m = radii.size();
    std::vector<long double> h(m);
    std::vector<long double> p(m);
    const complex_ld phase = theta ? std::polar(1.0L, 2.0L * static_cast<long double>(*theta))
                                   : complex_ld(1.0L, 0.0L);
    for (std::size_t i = 0; i < m; ++i) {
        const long double r = radii[i];
        h[i] = 1.0L - r;
        p[i] = polylog_neg(k, r * phase).real();
    }

    // Neville tableau evaluated at h = 0; `diagonal` holds the extrapolant that
    // uses the first j + 1 radii.
    std::vector<long double> diagonal{p[0]};
    for (std::size_t level = 1; level < m; ++level) {
        for (std::size_t i = 0; i + level < m; ++i) {
            p[i] = (h[i] * p[i + 1] - h[i + level] * p[i]) / (h[i] - h[i + level]);
        }
        diagonal.push_back(p[0]);
    }

    const long double last = diagonal[m - 1];
    const long double change = std::abs(last - diagonal[m - 2]);
    if (!std::isfinite(last) ||
        change > options.divergence_tolerance * std::max(1.0L, std::abs(last))) {
        throw ExtrapolationError("abel_sum_oracle: extrapolants do not converge (k = " +
                                 std::to_string(k) + ", last change " +
                                 std::to_string(static_cast<double>(change)) + ")");
    }
    return static_cast<double>(last);
}

namespace {

// Eulerian numbers A(k, 0..k-1) by the standard triangle recurrence.
std::vector<Real> eulerian_row(int k) {
    std::vector<Real> row{1};
    for (int n = 2; n <= k; ++n) {
        std::vector<Real> next(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            const Real left = (j >= 1) ? row[static_cast<std::size_t>(j - 1)] : Real(0);
            const Real here = (j < n - 1) ? row[static_cast<std::size_t>(j)] : Real(0);
            next[static_cast<std::size_t>(j)] = (n - j) * left + (j + 1) * here;
        }
        row = std::move(next);
    }
    return row;
}

} // namespace

FinitePartResult cutoff_sum_oracle(int k, const EpsilonSchedule& schedule) {
    if (k < 1 || k % 2 == 0) {
        throw std::invalid_argument("cutoff_sum_oracle: k must be a positive odd integer");
    }
    const FitOptions fit{.divergent_order = k + 1, .positive_degree = schedule.fit_basis_degree};
    schedule.validate(static_cast<std::size_t>(k + 2 + schedule.fit_basis_degree));

    // S(eps) = x A_k(x) / (1 - x)^(k+1) with x = e^-eps.
    const auto eulerian = eulerian_row(k);
    std::vector<Real> samples;
    samples.reserve(schedule.values.size());
    for (double eps : schedule.values) {
        using std::exp;
        using std::pow;
        const Real e = eps;
        const Real x = exp(-e);
        const Real one_minus_x = 1 - x;
        Real poly = 0;
        for (auto it = eulerian.rbegin(); it != eulerian.rend(); ++it) {
            poly = poly * x + *it;
        }
        samples.push_back(x * poly / pow(one_minus_x, k + 1));
    }
    return fit_finite_part(schedule.values, samples, fit);
}

} // namespace plates::regsum
