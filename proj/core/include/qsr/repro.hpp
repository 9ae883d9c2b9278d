#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qsr {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct ReproOptions {
    int bench_seeds = 12;        // >= 10 seeds for the seed-dependent ratio bands
    int sweep_trajectories = 400;  // Monte Carlo budget of the distance sweep
    int cross_check_trajectories = 500;  // pinned for the backend cross-check
};

/// Names of the validation checks, in execution order.
std::vector<std::string> repro_check_names();

/// Runs one named check.
CheckResult run_repro_check(const std::string& name, const ReproOptions& opts);

/// Runs the full validation suite in order, invoking `on_done` (if set)
/// after each check completes.
std::vector<CheckResult> run_repro_checks(
    const ReproOptions& opts = {},
    const std::function<void(const CheckResult&)>& on_done = {});

}  // namespace qsr
