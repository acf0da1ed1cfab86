#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plates/regsum.hpp"
#include "plates/spectrum.hpp"

namespace plates::verify {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    /// "<=" for error bounds, ">=" for growth checks.
    std::string relation = "<=";
    bool passed = false;
};

struct Options {
    double length = 1.0;
    int grid_points = 101;
    double margin = 0.02;
    /// Reduce the mode-sum oracle to 3 theta points.
    bool quick = false;
    /// Overrides the mode-sum oracle schedule.
    std::optional<regsum::EpsilonSchedule> schedule;
    /// Test-harness mutation: flips the sign of the B part of <phi d_z^2 phi> for
    /// Neumann before the tensor checks run.  The trace check must then fail.
    bool inject_neumann_sign_flip = false;
};

/// Evenly spaced interior z values L (margin + (1 - 2 margin) i / (points - 1)).
/// Throws std::invalid_argument unless points >= 3 and 0 < margin < 1/2.
std::vector<double> interior_grid(double length, int points, double margin);

/// Runs every cross-check in a fixed order.  Each check is evaluated for both
/// boundary conditions where that applies.
std::vector<CheckResult> run_all(const Options& options);

bool all_passed(const std::vector<CheckResult>& results);

} // namespace plates::verify
