#pragma once

#include <stdexcept>

namespace plates {

/// Argument outside the region where a closed form is defined, e.g. a point on a plate surface.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Gamma-function argument at a non-positive integer.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Richardson extrapolants failed to settle; the series has no Abel limit.
class ExtrapolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Least-squares design matrix is numerically singular.
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mode sum truncated before the cutoff weight has decayed.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A result that must be exactly position independent is not.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace plates
