#pragma once

#include <span>

#include "plates/real.hpp"
#include "plates/regsum.hpp"

namespace plates::regsum {

struct FitOptions {
    /// Number of negative powers eps^-1 ... eps^-divergent_order in the basis.
    int divergent_order = 0;
    /// Number of positive powers eps^1 ... eps^positive_degree in the basis.
    int positive_degree = 2;
    /// Reject fits whose column-scaled design matrix exceeds this condition estimate.
    long double condition_limit = 1e16L;
};

/// Ordinary least-squares fit of samples(eps) to a Laurent polynomial in eps.  The
/// constant coefficient becomes the finite part.  Solved by column-pivoted QR in
/// the precision of the samples.  Throws FitError if the design is numerically
/// singular.
FinitePartResult fit_finite_part(std::span<const double> epsilons,
                                 std::span<const long double> samples,
                                 const FitOptions& options);
FinitePartResult fit_finite_part(std::span<const double> epsilons, std::span<const Real> samples,
                                 const FitOptions& options);

} // namespace plates::regsum
