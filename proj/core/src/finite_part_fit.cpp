#include "plates/finite_part_fit.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "plates/errors.hpp"

namespace plates::regsum {

namespace {

template <class Scalar>
FinitePartResult fit(std::span<const double> epsilons, std::span<const Scalar> samples,
                     const FitOptions& options) {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using std::abs;
    using std::pow;
    using std::sqrt;

    if (epsilons.size() != samples.size()) {
        throw std::invalid_argument("fit_finite_part: epsilons and samples differ in length");
    }
    const int lowest = -options.divergent_order;
    const int columns = options.divergent_order + 1 + options.positive_degree;
    const auto rows = static_cast<Eigen::Index>(epsilons.size());
    if (rows < columns) {
        throw std::invalid_argument("fit_finite_part: fewer samples than basis functions");
    }

    Matrix design(rows, columns);
    Vector rhs(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Scalar eps = epsilons[static_cast<std::size_t>(i)];
        for (int c = 0; c < columns; ++c) {
            design(i, c) = pow(eps, lowest + c);
        }
        rhs(i) = samples[static_cast<std::size_t>(i)];
    }

    // Column equilibration; the raw powers span many decades.
    Vector scale(columns);
    for (int c = 0; c < columns; ++c) {
        scale(c) = design.col(c).cwiseAbs().maxCoeff();
        design.col(c) /= scale(c);
    }

    Eigen::ColPivHouseholderQR<Matrix> qr(design);
    const Scalar r_max = abs(qr.matrixR()(0, 0));
    const Scalar r_min = abs(qr.matrixR()(columns - 1, columns - 1));
    if (!(r_min > 0) || r_max / r_min > Scalar(options.condition_limit)) {
        const double condition = r_min > 0 ? static_cast<double>(r_max / r_min) : INFINITY;
        throw FitError("fit_finite_part: design matrix is numerically singular (condition ~" +
                       std::to_string(condition) + ")");
    }
    Vector coeffs = qr.solve(rhs);
    const Vector fitted = design * coeffs;
    coeffs = coeffs.cwiseQuotient(scale);

    Scalar sum_sq = 0;
    for (Eigen::Index i = 0; i < rows; ++i) {
        const Scalar rel = (rhs(i) - fitted(i)) / abs(rhs(i));
        sum_sq += rel * rel;
    }

    FinitePartResult result;
    result.finite_part = static_cast<double>(coeffs(options.divergent_order));
    for (int c = 0; c < options.divergent_order; ++c) {
        result.divergent_coeffs.push_back(static_cast<double>(coeffs(c)));
    }
    result.fit_residual = static_cast<double>(sqrt(sum_sq / Scalar(rows)));
    return result;
}

} // namespace

FinitePartResult fit_finite_part(std::span<const double> epsilons,
                                 std::span<const long double> samples,
                                 const FitOptions& options) {
    return fit(epsilons, samples, options);
}

// Eigen cannot instantiate its QR on the float128 wrapper, so the quad-precision
// fit runs in the software binary128 type instead.
FinitePartResult fit_finite_part(std::span<const double> epsilons, std::span<const Real> samples,
                                 const FitOptions& options) {
    using Quad = boost::multiprecision::cpp_bin_float_quad;
    std::vector<Quad> converted;
    converted.reserve(samples.size());
    for (const Real& x : samples) {
        converted.emplace_back(x);
    }
    return fit(epsilons, std::span<const Quad>(converted), options);
}

} // namespace plates::regsum
