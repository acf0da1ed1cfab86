#pragma once

#include <boost/multiprecision/float128.hpp>

namespace plates {

/// Working precision for local expectation values and tensor assembly.  Near the
/// plates B/A grows like theta^-4, and the improved tensor cancels the B parts;
/// quad precision keeps that cancellation clean down to theta ~ 1e-5.
using Real = boost::multiprecision::float128;

inline double to_double(const Real& value) { return static_cast<double>(value); }

} // namespace plates
