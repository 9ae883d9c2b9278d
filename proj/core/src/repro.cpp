#include "qsr/repro.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "qsr/noise.hpp"
#include "qsr/route_bench.hpp"
#include "qsr/verify.hpp"

namespace qsr {

namespace {

constexpr double kExactTol = 1e-12;
constexpr double kIdealLimitTol = 1e-9;

struct Failure {
    std::string text;
};

void expect(bool ok, const std::string& what, std::string& log) {
    if (!ok) throw Failure{what};
    if (!log.empty()) log += "; ";
    log += what;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// --- individual checks -----------------------------------------------------

std::string check_routed_cnot_exact(const ReproOptions&) {
    std::string log;
    const int len = 4, d = 8;
    const Path path{0, 1, 2, 3, 4};
    const auto circuit = build_routed_cnot(len + 1, d, path, 1);
    const int controls[] = {0};
    const auto report = verify_cleanup(
        circuit, [](QuditRegister& reg) { apply_cx(reg, 0, 4); }, controls, 4,
        all_binary_inputs(len + 1));
    expect(report.max_infidelity <= kExactTol,
           "infidelity " + fmt(report.max_infidelity) + " <= 1e-12 over " +
               std::to_string(report.inputs_checked) + " inputs",
           log);
    expect(report.max_intermediate_disturbance <= kExactTol,
           "intermediate disturbance " + fmt(report.max_intermediate_disturbance) + " <= 1e-12",
           log);
    expect(report.max_routing_population <= kExactTol,
           "routing population " + fmt(report.max_routing_population) + " <= 1e-12", log);
    return log;
}

std::string check_depth_law(const ReproOptions&) {
    std::string log;
    for (int len = 2; len <= 20; ++len) {
        Path path(static_cast<std::size_t>(len + 1));
        for (int i = 0; i <= len; ++i) path[static_cast<std::size_t>(i)] = i;
        const auto routed = build_routed_cnot(len + 1, 4, path, 1);
        const int depth = schedule(routed).depth();
        if (depth != 2 * len + 1)
            throw Failure{"routed depth at L=" + std::to_string(len) + " is " +
                          std::to_string(depth) + ", want " + std::to_string(2 * len + 1)};
        if (swap_transport_cost(len) != 3 * len)
            throw Failure{"swap transport at L=" + std::to_string(len) + " is not 3L"};
        if (depth < len) throw Failure{"depth fell below the light-cone bound"};
    }
    expect(true, "routed depth 2L+1 and swap transport 3L for L=2..20", log);
    return log;
}

std::string check_crosstalk_zero(const ReproOptions&) {
    std::string log;
    const auto report = verify_crosstalk(8, Path{0, 1, 2}, 1, Path{3, 1, 4}, 2);
    expect(report.overlap_infidelity <= kExactTol,
           "overlap infidelity " + fmt(report.overlap_infidelity) + " <= 1e-12", log);
    expect(report.final_infidelity <= kExactTol,
           "final infidelity " + fmt(report.final_infidelity) + " <= 1e-12", log);
    expect(report.distribution_deviation <= kExactTol,
           "shared-node distribution deviation " + fmt(report.distribution_deviation) +
               " <= 1e-12 over " + std::to_string(report.inputs_checked) + " inputs",
           log);
    return log;
}

std::string check_fanin_truth_table(const ReproOptions&) {
    std::string log;
    const int d = 16;
    const std::vector<Path> arms{{0, 3}, {1, 3}, {2, 3}};
    const std::vector<int> buses{1, 2, 3};
    const int active[] = {1, 2, 3};
    const auto circuit =
        build_routed_fanin(4, d, arms, buses, table_conjunction(3, active), u2_x());
    const int controls[] = {0, 1, 2};
    const auto table = table_conjunction(3, active);
    const auto report = verify_cleanup(
        circuit,
        [&table](QuditRegister& reg) {
            const int ctrl[] = {0, 1, 2};
            apply_ideal_fanin(reg, ctrl, 3, table, u2_x());
        },
        controls, 3, all_binary_inputs(4));
    expect(report.max_infidelity <= kExactTol,
           "conjunction fan-in infidelity " + fmt(report.max_infidelity) + " <= 1e-12 over " +
               std::to_string(report.inputs_checked) + " inputs (incl. superposition)",
           log);
    expect(report.max_routing_population <= kExactTol,
           "routing population " + fmt(report.max_routing_population) + " <= 1e-12", log);
    return log;
}

std::string check_fanin_depth_constant(const ReproOptions&) {
    std::string log;
    const int active[] = {1, 2, 3};
    for (int len = 1; len <= 6; ++len) {
        const int target = 3 * len;
        std::vector<Path> arms;
        for (int arm = 0; arm < 3; ++arm) {
            Path p;
            for (int i = 0; i < len; ++i) p.push_back(arm * len + i);
            p.push_back(target);
            arms.push_back(std::move(p));
        }
        const auto circuit = build_routed_fanin(target + 1, 16, arms, {1, 2, 3},
                                                table_conjunction(3, active), u2_x());
        const int depth = schedule(circuit).depth();
        if (depth != 2 * len + 5)
            throw Failure{"fan-in depth at L=" + std::to_string(len) + " is " +
                          std::to_string(depth) + ", want " + std::to_string(2 * len + 5)};
    }
    expect(true, "three-control fan-in depth 2L+5 for L=1..6", log);
    return log;
}

std::string check_congestion_rounds(const ReproOptions&) {
    std::string log;
    const auto v = validate_congestion_theorem(5, {1, 2, 3});
    expect(v.graphs_checked == 1099,
           "checked " + std::to_string(v.graphs_checked) + " labeled graphs (want 1099)", log);
    expect(v.discrepancies == 0, std::to_string(v.discrepancies) + " discrepancies", log);
    return log;
}

std::string check_mirror_qft_line(const ReproOptions&) {
    std::string log;
    const int k_list[] = {1, 2, 3};
    const auto mirror = run_benchmark("mirror", "line", 8, 0, k_list);
    expect(std::abs(mirror.mean_swap() - 48.0) <= kExactTol &&
               std::abs(mirror.mean_routed() - 36.0) <= kExactTol &&
               std::abs(mirror.ratio() - 0.75) <= kExactTol,
           "mirror line transport 48.00 / 36.00 / ratio 0.750", log);
    expect(std::abs(mirror.mean_chi() - 4.0) <= kExactTol &&
               std::abs(mirror.mean_rounds(2) - 2.0) <= kExactTol,
           "mirror line chi 4.00 and R2 2.00", log);

    const auto qft = run_benchmark("qft", "line", 8, 0, k_list);
    expect(qft.layers.size() == 13,
           "qft line layering gives " + std::to_string(qft.layers.size()) + " layers", log);
    expect(std::abs(qft.mean_swap() - 19.38) <= 0.01 &&
               std::abs(qft.mean_routed() - 15.08) <= 0.01,
           "qft line means " + fmt(qft.mean_swap()) + " / " + fmt(qft.mean_routed()) +
               " within 0.01 of 19.38 / 15.08",
           log);
    return log;
}

std::string check_ratio_bands(const ReproOptions& opts) {
    std::string log;
    struct Band {
        const char* family;
        const char* topology;
        double lo, hi;
    };
    const Band bands[] = {
        {"qft", "grid", 0.80, 0.88},       {"qaoa", "line", 0.74, 0.83},
        {"qaoa", "grid", 0.84, 0.93},      {"amplitude", "line", 0.78, 0.86},
        {"amplitude", "grid", 0.82, 0.90},
    };
    const int k_list[] = {1, 2, 3};
    for (const auto& band : bands) {
        double sum = 0.0;
        for (int seed = 0; seed < opts.bench_seeds; ++seed)
            sum += run_benchmark(band.family, band.topology, 8, static_cast<std::uint64_t>(seed),
                                 k_list)
                       .ratio();
        const double mean = sum / opts.bench_seeds;
        expect(mean >= band.lo && mean <= band.hi,
               std::string(band.family) + "/" + band.topology + " ratio " + fmt(mean) + " in [" +
                   fmt(band.lo) + ", " + fmt(band.hi) + "] over " +
                   std::to_string(opts.bench_seeds) + " seeds",
               log);
    }
    return log;
}

struct FaninInstance {
    Circuit circuit;
    QuditRegister probe;
    QuditRegister ideal;
};

FaninInstance make_fanin_instance(int len, int d) {
    // Two-control conjunction with arm length len ending at the last site.
    const int target = 2 * len;
    std::vector<Path> arms;
    std::vector<int> controls;
    for (int arm = 0; arm < 2; ++arm) {
        Path p;
        for (int i = 0; i < len; ++i) p.push_back(arm * len + i);
        p.push_back(target);
        controls.push_back(p.front());
        arms.push_back(std::move(p));
    }
    const int active[] = {1, 2};
    auto circuit =
        build_routed_fanin(target + 1, d, arms, {1, 2}, table_conjunction(2, active), u2_x());

    QuditRegister probe(target + 1, d);
    for (int c : controls) apply_single(probe, c, u2_h());
    QuditRegister ideal = probe;
    apply_ideal_fanin(ideal, controls, target, table_conjunction(2, active), u2_x());
    return {std::move(circuit), std::move(probe), std::move(ideal)};
}

std::string check_noise_ideal_limit(const ReproOptions&) {
    std::string log;
    const auto model = NoiseModel::ideal();
    {
        auto inst = make_fanin_instance(1, 8);
        const auto rho = evolve_master(inst.probe, inst.circuit, model);
        double pop = 0.0;
        for (int site = 0; site < inst.circuit.n_sites; ++site)
            pop = std::max(pop, rho.routing_population(site));
        expect(rho.fidelity(inst.ideal) >= 1.0 - kIdealLimitTol && pop <= kIdealLimitTol,
               "master backend: L=1 fan-in fidelity " + fmt(rho.fidelity(inst.ideal)) +
                   ", routing population " + fmt(pop),
               log);
    }
    for (int len = 1; len <= 2; ++len) {
        auto inst = make_fanin_instance(len, 8);
        const auto res =
            evolve_trajectories(inst.probe, inst.circuit, model, {16, 0, 0.0}, inst.ideal);
        expect(res.mean_fidelity >= 1.0 - kIdealLimitTol &&
                   res.max_routing_pop <= kIdealLimitTol && res.stderr_fidelity == 0.0,
               "trajectory backend: L=" + std::to_string(len) + " fan-in fidelity " +
                   fmt(res.mean_fidelity) + ", routing population " + fmt(res.max_routing_pop),
               log);
    }
    return log;
}

std::string check_trajectory_master_agreement(const ReproOptions& opts) {
    std::string log;
    const int d = 5;
    const Path path{0, 1, 2};
    const auto circuit = build_routed_cnot(3, d, path, 1);
    const auto model = NoiseModel::t1_limited({80, 45, 25, 14});

    QuditRegister probe(3, d);
    apply_single(probe, 0, u2_h());
    QuditRegister ideal = probe;
    apply_cx(ideal, 0, 2);

    const auto rho = evolve_master(probe, circuit, model);
    const double f_master = rho.fidelity(ideal);
    const auto res = evolve_trajectories(probe, circuit, model,
                                         {opts.cross_check_trajectories, 0, 0.0}, ideal);
    const double gap = std::abs(res.mean_fidelity - f_master);
    expect(res.stderr_fidelity > 0.0 && gap <= 3.0 * res.stderr_fidelity,
           "master " + fmt(f_master) + " vs trajectories " + fmt(res.mean_fidelity) + " +- " +
               fmt(res.stderr_fidelity) + " (gap " + fmt(gap) + " <= 3 sigma, " +
               std::to_string(res.n_traj) + " trajectories)",
           log);
    return log;
}

std::string check_noise_trends(const ReproOptions& opts) {
    std::string log;
    const auto model = NoiseModel::t1_limited({80, 45, 25, 14});

    // (a) routed fidelity decreases with distance in the T1-limited sweep.
    const auto rows = distance_sweep(2, 6, 5, model, {opts.sweep_trajectories, 0, 0.0});
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const double slack =
            3.0 * std::sqrt(rows[i].se_routed * rows[i].se_routed +
                            rows[i + 1].se_routed * rows[i + 1].se_routed);
        if (!(rows[i + 1].fid_routed < rows[i].fid_routed + slack))
            throw Failure{"routed fidelity not decreasing between L=" +
                          std::to_string(rows[i].len) + " and L=" +
                          std::to_string(rows[i + 1].len)};
    }
    expect(rows.back().fid_routed < rows.front().fid_routed,
           "routed fidelity falls from " + fmt(rows.front().fid_routed) + " (L=2) to " +
               fmt(rows.back().fid_routed) + " (L=6)",
           log);

    // (b), (c) win-region structure on a master-equation instance.
    const double durations[] = {0.2, 0.6, 1.0};
    const double multipliers[] = {1.0, 2.0, 3.0, 5.0};
    const auto cells = threshold_scan(durations, multipliers, 2, 5, model, {1, 0, 0.0});
    auto win_at = [&cells](double dur, double mult) {
        for (const auto& c : cells)
            if (c.duration == dur && c.multiplier == mult) return c.win;
        throw Failure{"missing scan cell"};
    };
    for (double dur : durations)
        for (std::size_t m = 0; m + 1 < std::size(multipliers); ++m)
            if (!(win_at(dur, multipliers[m + 1]) >= win_at(dur, multipliers[m]) - 1e-9))
                throw Failure{"win not nondecreasing in lifetime multiplier at duration " +
                              fmt(dur)};
    expect(true, "win nondecreasing in higher-level lifetime multiplier at fixed duration",
           log);
    for (double mult : multipliers)
        for (std::size_t i = 0; i + 1 < std::size(durations); ++i)
            if (!(win_at(durations[i], mult) > win_at(durations[i + 1], mult) - 1e-9))
                throw Failure{"win does not grow as routed duration shrinks at multiplier " +
                              fmt(mult)};
    expect(true, "win grows as routed primitive duration shrinks at fixed multiplier", log);
    return log;
}

std::string check_algebra_gate_properties(const ReproOptions&) {
    std::string log;

    // Exhaustive encode/extract round trip and injectivity for K <= 4.
    for (int k = 0; k <= 4; ++k) {
        const BusConfig cfg(min_dimension(k), k);
        std::set<int> image;
        for (int mask = 0; mask < (1 << (k + 1)); ++mask) {
            const int x0 = mask & 1;
            std::vector<int> bits(static_cast<std::size_t>(k));
            for (int b = 1; b <= k; ++b) bits[static_cast<std::size_t>(b - 1)] = (mask >> b) & 1;
            const int r = encode(x0, bits, cfg);
            if (!is_admissible(r, k)) throw Failure{"encoded value not admissible"};
            if (extract(r, 0, cfg) != x0) throw Failure{"logical bit round trip failed"};
            for (int b = 1; b <= k; ++b)
                if (extract(r, b, cfg) != bits[static_cast<std::size_t>(b - 1)])
                    throw Failure{"bus digit round trip failed"};
            image.insert(r);
        }
        if (static_cast<int>(image.size()) != (1 << (k + 1)))
            throw Failure{"encode not injective at K=" + std::to_string(k)};
    }
    expect(true, "round trip and injectivity exhaustive for K<=4", log);

    // Every routing primitive is a basis permutation at d=8.
    const BusConfig cfg(8, 2);
    auto expect_permutation = [](const std::string& what, int n_sites, int d, auto&& apply) {
        const std::size_t dim = [&] {
            std::size_t v = 1;
            for (int i = 0; i < n_sites; ++i) v *= static_cast<std::size_t>(d);
            return v;
        }();
        std::set<std::size_t> seen;
        for (std::size_t col = 0; col < dim; ++col) {
            QuditRegister reg(n_sites, d);
            reg.data()[0] = 0.0;
            reg.data()[col] = 1.0;
            apply(reg);
            std::size_t hits = 0, row = 0;
            for (std::size_t i = 0; i < dim; ++i) {
                if (std::abs(reg.amp(i) - cdouble{1.0, 0.0}) < 1e-12) {
                    ++hits;
                    row = i;
                } else if (std::abs(reg.amp(i)) > 1e-12) {
                    throw Failure{what + " is not a basis permutation"};
                }
            }
            if (hits != 1 || !seen.insert(row).second)
                throw Failure{what + " is not a bijection on basis states"};
        }
    };
    for (int delta = 0; delta < 8; ++delta)
        expect_permutation("Shift", 1, 8,
                           [&](QuditRegister& r) { apply_shift(r, 0, delta); });
    for (int k = 1; k <= 2; ++k)
        for (int sign : {+1, -1}) {
            expect_permutation("CBL", 2, 8,
                               [&](QuditRegister& r) { apply_cbl(r, 0, 1, k, sign, cfg); });
            expect_permutation("BCP", 2, 8,
                               [&](QuditRegister& r) { apply_bcp(r, 0, 1, k, sign, cfg); });
        }
    expect_permutation("CX", 2, 8, [&](QuditRegister& r) { apply_cx(r, 0, 1); });
    expect_permutation("Swap", 2, 8, [&](QuditRegister& r) { apply_swap(r, 0, 1); });
    for (int k = 1; k <= 2; ++k)
        expect_permutation("CXR", 1, 8, [&](QuditRegister& r) { apply_cxr(r, 0, k, cfg); });
    expect(true, "Shift/CBL/BCP/CX/Swap/CXR are basis permutations at d=8", log);

    // Truth-table synthesis equals the product of block gates, all 16 tables.
    for (const Unitary2& u : {u2_x(), u2_h()}) {
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<std::uint8_t> table(4);
            for (int idx = 0; idx < 4; ++idx) table[static_cast<std::size_t>(idx)] = (mask >> idx) & 1;
            for (std::size_t col = 0; col < 8; ++col) {
                QuditRegister direct(1, 8);
                direct.data()[0] = 0.0;
                direct.data()[col] = 1.0;
                QuditRegister product = direct;
                apply_boolean_target(direct, 0, table, u, cfg);
                for (int s = 0; s <= cfg.max_value() - 1; s += 2)
                    if (table[static_cast<std::size_t>(s >> 1)])
                        apply_block(product, 0, s, u, cfg);
                for (std::size_t i = 0; i < 8; ++i)
                    if (std::abs(direct.amp(i) - product.amp(i)) > 1e-12)
                        throw Failure{"table synthesis mismatch for mask " +
                                      std::to_string(mask)};
            }
        }
    }
    expect(true, "boolean target equals its block-product synthesis for all 16 tables at K=2",
           log);
    return log;
}

using CheckFn = std::string (*)(const ReproOptions&);

const std::vector<std::pair<std::string, CheckFn>>& check_table() {
    static const std::vector<std::pair<std::string, CheckFn>> table = {
        {"routed-cnot-exact", check_routed_cnot_exact},
        {"depth-law", check_depth_law},
        {"crosstalk-zero", check_crosstalk_zero},
        {"fanin-truth-table", check_fanin_truth_table},
        {"fanin-depth-constant", check_fanin_depth_constant},
        {"congestion-rounds-exhaustive", check_congestion_rounds},
        {"mirror-qft-line-metrics", check_mirror_qft_line},
        {"benchmark-ratio-bands", check_ratio_bands},
        {"noise-ideal-limit", check_noise_ideal_limit},
        {"trajectory-master-agreement", check_trajectory_master_agreement},
        {"noise-trends", check_noise_trends},
        {"algebra-gate-properties", check_algebra_gate_properties},
    };
    return table;
}

}  // namespace

std::vector<std::string> repro_check_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : check_table()) names.push_back(name);
    return names;
}

CheckResult run_repro_check(const std::string& name, const ReproOptions& opts) {
    for (const auto& [check_name, fn] : check_table()) {
        if (check_name != name) continue;
        CheckResult result;
        result.name = name;
        const auto start = std::chrono::steady_clock::now();
        try {
            result.detail = fn(opts);
            result.passed = true;
        } catch (const Failure& f) {
            result.detail = f.text;
            result.passed = false;
        }
        result.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result;
    }
    throw argument_error("unknown check '" + name + "'");
}

std::vector<CheckResult> run_repro_checks(const ReproOptions& opts,
                                          const std::function<void(const CheckResult&)>& on_done) {
    std::vector<CheckResult> results;
    for (const auto& [name, fn] : check_table()) {
        results.push_back(run_repro_check(name, opts));
        if (on_done) on_done(results.back());
    }
    return results;
}

}  // namespace qsr
