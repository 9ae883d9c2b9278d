#include "qsr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qsr/errors.hpp"

namespace qsr {

namespace {

void check_simulable(int n_sites, int d) {
    double amps = 1.0;
    for (int i = 0; i < n_sites; ++i) amps *= static_cast<double>(d);
    if (amps > static_cast<double>(1 << 22))
        throw resource_error("instance needs " + std::to_string(amps) +
                             " amplitudes; shrink it below 2^22");
}

double max_site_disturbance(const QuditRegister& out, const std::vector<int>& initial,
                            const std::set<int>& endpoints) {
    double worst = 0.0;
    for (int site = 0; site < out.n_sites(); ++site) {
        if (endpoints.count(site)) continue;
        const auto p = site_distribution(out, site);
        worst = std::max(worst,
                         1.0 - p[static_cast<std::size_t>(initial[static_cast<std::size_t>(site)])]);
    }
    return worst;
}

double max_routing_pop(const QuditRegister& out) {
    double worst = 0.0;
    for (int site = 0; site < out.n_sites(); ++site)
        worst = std::max(worst, routing_population(out, site));
    return worst;
}

// Algebraic forward-lift oracle: when the source logical bit is set, every
// later site of the path gains the bus offset. Written against the basis
// decomposition directly so it shares no code with the gate kernels.
void apply_lift_prediction(QuditRegister& reg, const Path& path, int delta) {
    const int d = reg.d();
    std::vector<cdouble> out(reg.dim(), cdouble{0.0, 0.0});
    for (std::size_t i = 0; i < reg.dim(); ++i) {
        if (reg.amp(i) == cdouble{0.0, 0.0}) continue;
        std::size_t j = i;
        if (reg.level_at(i, path[0]) & 1) {
            for (std::size_t s = 1; s < path.size(); ++s) {
                const std::size_t st = reg.stride(path[s]);
                const int level = reg.level_at(j, path[s]);
                const int lifted = ((level + delta) % d + d) % d;
                j = j - st * static_cast<std::size_t>(level) +
                    st * static_cast<std::size_t>(lifted);
            }
        }
        out[j] += reg.amp(i);
    }
    reg.data() = std::move(out);
}

}  // namespace

std::vector<std::vector<int>> all_binary_inputs(int n_sites) {
    std::vector<std::vector<int>> inputs;
    inputs.reserve(std::size_t{1} << n_sites);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n_sites); ++mask) {
        std::vector<int> levels(static_cast<std::size_t>(n_sites));
        for (int s = 0; s < n_sites; ++s)
            levels[static_cast<std::size_t>(s)] = static_cast<int>(mask >> (n_sites - 1 - s)) & 1;
        inputs.push_back(std::move(levels));
    }
    return inputs;
}

CleanupReport verify_cleanup(const Circuit& c,
                             const std::function<void(QuditRegister&)>& ideal,
                             std::span<const int> control_sites, int target_site,
                             const std::vector<std::vector<int>>& basis_inputs) {
    validate_circuit(c);
    check_simulable(c.n_sites, c.cfg.d);
    std::set<int> endpoints(control_sites.begin(), control_sites.end());
    endpoints.insert(target_site);

    CleanupReport report;
    auto account = [&](const QuditRegister& out, const QuditRegister& want,
                       const std::vector<int>& initial) {
        report.max_infidelity = std::max(report.max_infidelity, 1.0 - fidelity(want, out));
        report.max_intermediate_disturbance =
            std::max(report.max_intermediate_disturbance,
                     max_site_disturbance(out, initial, endpoints));
        report.max_routing_population = std::max(report.max_routing_population,
                                                 max_routing_pop(out));
        ++report.inputs_checked;
    };

    for (const auto& levels : basis_inputs) {
        QuditRegister out = QuditRegister::basis(c.n_sites, c.cfg.d, levels);
        QuditRegister want = out;
        run(out, c);
        ideal(want);
        account(out, want, levels);
    }

    // Fixed superposition probe: uniform control superposition, |0> elsewhere.
    const std::vector<int> zeros(static_cast<std::size_t>(c.n_sites), 0);
    QuditRegister probe = QuditRegister::basis(c.n_sites, c.cfg.d, zeros);
    for (int site : control_sites) apply_single(probe, site, u2_h());
    QuditRegister want = probe;
    run(probe, c);
    ideal(want);
    account(probe, want, zeros);
    return report;
}

CrosstalkReport verify_crosstalk(int d, const Path& path_a, int bus_a, const Path& path_b,
                                 int bus_b) {
    std::set<int> shared_set;
    for (int v : path_a)
        if (std::find(path_b.begin(), path_b.end(), v) != path_b.end()) shared_set.insert(v);
    if (!shared_set.empty() && bus_a == bus_b)
        throw config_error("intersecting routes must use distinct buses");

    int n_sites = 0;
    for (int v : path_a) n_sites = std::max(n_sites, v + 1);
    for (int v : path_b) n_sites = std::max(n_sites, v + 1);
    check_simulable(n_sites, d);

    const int n_buses = std::max(bus_a, bus_b);
    const Circuit ca = build_routed_cnot(n_sites, d, path_a, bus_a, n_buses);
    const Circuit cb = build_routed_cnot(n_sites, d, path_b, bus_b, n_buses);
    const int len_a = static_cast<int>(path_a.size()) - 1;
    const int len_b = static_cast<int>(path_b.size()) - 1;
    const BusConfig cfg(d, n_buses);
    const int delta_a = cfg.offset(bus_a);
    const int delta_b = cfg.offset(bus_b);

    // Interleaved execution: both forward stages, both target gates, both
    // cleanup stages. The list is a linear extension of the joint schedule.
    std::vector<GateRecord> merged;
    auto append = [&merged](const Circuit& c, int from, int to) {
        for (int i = from; i < to; ++i) merged.push_back(c.gates[static_cast<std::size_t>(i)]);
    };
    append(ca, 0, len_a);
    append(cb, 0, len_b);
    const std::size_t overlap_mark = merged.size();
    append(ca, len_a, 2 * len_a + 1);
    append(cb, len_b, 2 * len_b + 1);

    const int shared = shared_set.empty() ? -1 : *shared_set.begin();
    auto lift_at_shared = [&](int site, const Path& path, int delta, int control_bit) {
        if (std::find(path.begin() + 1, path.end(), site) == path.end()) return 0;
        return control_bit * delta;
    };

    CrosstalkReport report;
    auto run_case = [&](QuditRegister reg, int xa, int xb, int w) {
        QuditRegister predicted = reg;
        QuditRegister want = reg;

        for (std::size_t i = 0; i < merged.size(); ++i) {
            if (i == overlap_mark) {
                apply_lift_prediction(predicted, path_a, delta_a);
                apply_lift_prediction(predicted, path_b, delta_b);
                report.overlap_infidelity = std::max(report.overlap_infidelity,
                                                     1.0 - fidelity(predicted, reg));
                if (shared >= 0 && xa >= 0) {
                    const auto p = site_distribution(reg, shared);
                    const int expect = w + lift_at_shared(shared, path_a, delta_a, xa) +
                                       lift_at_shared(shared, path_b, delta_b, xb);
                    report.distribution_deviation =
                        std::max(report.distribution_deviation,
                                 1.0 - p[static_cast<std::size_t>(expect)]);
                }
            }
            apply_gate(reg, merged[i], cfg);
        }

        apply_cx(want, path_a.front(), path_a.back());
        apply_cx(want, path_b.front(), path_b.back());
        report.final_infidelity = std::max(report.final_infidelity, 1.0 - fidelity(want, reg));
        ++report.inputs_checked;
    };

    std::vector<int> levels(static_cast<std::size_t>(n_sites), 0);
    for (int xa = 0; xa < 2; ++xa)
        for (int xb = 0; xb < 2; ++xb)
            for (int w = 0; w < (shared >= 0 ? 2 : 1); ++w) {
                std::fill(levels.begin(), levels.end(), 0);
                levels[static_cast<std::size_t>(path_a.front())] = xa;
                levels[static_cast<std::size_t>(path_b.front())] = xb;
                if (shared >= 0) levels[static_cast<std::size_t>(shared)] = w;
                run_case(QuditRegister::basis(n_sites, d, levels), xa, xb, w);
            }

    // Superposed controls: exercises coherence across all four branches.
    std::fill(levels.begin(), levels.end(), 0);
    QuditRegister probe = QuditRegister::basis(n_sites, d, levels);
    apply_single(probe, path_a.front(), u2_h());
    apply_single(probe, path_b.front(), u2_h());
    run_case(std::move(probe), -1, -1, 0);
    return report;
}

}  // namespace qsr
