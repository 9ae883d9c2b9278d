#pragma once

#include <functional>

#include "qsr/builders.hpp"

namespace qsr {

struct CleanupReport {
    double max_infidelity = 0.0;
    double max_intermediate_disturbance = 0.0;
    double max_routing_population = 0.0;
    int inputs_checked = 0;
};

/// Runs the circuit on each basis input and on one fixed superposition probe
/// (Hadamard on every control site, |0> elsewhere), comparing against `ideal`
/// applied to the same input state.
///
///   max_infidelity              worst 1 - |<ideal|out>|^2
///   max_intermediate_disturbance worst 1 - p(site at its initial level) over
///                               sites that are neither controls nor target
///   max_routing_population      worst leftover population above level 1
///
/// Instances above 2^22 amplitudes are refused with a resource error.
CleanupReport verify_cleanup(const Circuit& c,
                             const std::function<void(QuditRegister&)>& ideal,
                             std::span<const int> control_sites, int target_site,
                             const std::vector<std::vector<int>>& basis_inputs);

/// Every computational (all-levels-in-{0,1}) input of an n-site register.
std::vector<std::vector<int>> all_binary_inputs(int n_sites);

struct CrosstalkReport {
    double overlap_infidelity = 0.0;      // vs the algebraic full-lift prediction
    double final_infidelity = 0.0;        // vs the two independent ideal CX gates
    double distribution_deviation = 0.0;  // shared-node marginal vs binary decomposition
    int inputs_checked = 0;
};

/// Simulates two routed CNOTs executed together. The two paths may share
/// nodes; intersecting paths must carry distinct buses. Checks the fully
/// lifted state in the middle of the schedule against the routing-value
/// algebra, the final state against two ideal CX gates, and the shared-node
/// level distribution against the binary bus decomposition, over every
/// computational control combination plus one superposed-controls probe.
CrosstalkReport verify_crosstalk(int d, const Path& path_a, int bus_a, const Path& path_b,
                                 int bus_b);

}  // namespace qsr
