#include "qsr/noise.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qsr/errors.hpp"

namespace qsr {

namespace {

bool finite_time(double t) { return t > 0.0 && t != kNever; }

double clamped(const std::vector<double>& ladder, int level) {
    if (ladder.empty()) return kNever;
    const std::size_t idx = std::min(static_cast<std::size_t>(level - 1), ladder.size() - 1);
    return ladder[idx];
}

}  // namespace

NoiseModel NoiseModel::ideal() { return NoiseModel{}; }

NoiseModel NoiseModel::t1_limited(std::vector<double> ladder) {
    NoiseModel m;
    m.t1 = std::move(ladder);
    return m;
}

double NoiseModel::relaxation_time(int level) const { return clamped(t1, level); }

double NoiseModel::dephasing_time(int level) const { return clamped(tphi, level); }

double NoiseModel::duration_of(GateKind kind) const {
    switch (kind) {
        case GateKind::SingleSite: return 0.0;
        case GateKind::Shift:
        case GateKind::CBL:
        case GateKind::BCP: return routing_time;
        case GateKind::CX:
        case GateKind::CXR:
        case GateKind::CUR:
        case GateKind::Block:
        case GateKind::BooleanTarget: return target_time;
        case GateKind::Swap: return swap_time;
    }
    return 0.0;
}

void NoiseModel::validate() const {
    for (double t : t1)
        if (!(t > 0.0)) throw config_error("relaxation times must be positive");
    for (double t : tphi)
        if (!(t > 0.0)) throw config_error("dephasing times must be positive");
    if (leak_eps < 0.0 || leak_eps >= 1.0) throw config_error("leakage must lie in [0, 1)");
    if (routing_time < 0.0 || target_time < 0.0 || swap_time < 0.0)
        throw config_error("durations must be nonnegative");
}

NoiseModel with_routed_durations_scaled(const NoiseModel& model, double scale) {
    if (!(scale > 0.0)) throw argument_error("duration scale must be positive");
    NoiseModel m = model;
    m.routing_time *= scale;
    m.target_time *= scale;
    return m;
}

NoiseModel with_higher_level_lifetimes_scaled(const NoiseModel& model, double multiplier) {
    if (!(multiplier > 0.0)) throw argument_error("lifetime multiplier must be positive");
    NoiseModel m = model;
    for (std::size_t i = 1; i < m.t1.size(); ++i)
        if (finite_time(m.t1[i])) m.t1[i] *= multiplier;
    for (std::size_t i = 1; i < m.tphi.size(); ++i)
        if (finite_time(m.tphi[i])) m.tphi[i] *= multiplier;
    return m;
}

std::vector<CollapseOp> collapse_operators(int d, const NoiseModel& model) {
    model.validate();
    std::vector<CollapseOp> ops;
    for (int level = 1; level < d; ++level) {
        const double t1 = model.relaxation_time(level);
        if (finite_time(t1)) ops.push_back({level, 1.0 / t1, true});
    }
    for (int level = 1; level < d; ++level) {
        const double tphi = model.dephasing_time(level);
        if (finite_time(tphi)) ops.push_back({level, 1.0 / (2.0 * tphi), false});
    }
    return ops;
}

DensityMatrix::DensityMatrix(const QuditRegister& pure)
    : n_sites_(pure.n_sites()), d_(pure.d()), dim_(pure.dim()) {
    if (dim_ > 1024) throw resource_error("density matrix limited to 1024 amplitudes");
    rho_.assign(dim_ * dim_, cdouble{0.0, 0.0});
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            rho_[i * dim_ + j] = pure.amp(i) * std::conj(pure.amp(j));
}

double DensityMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += rho_[i * dim_ + i].real();
    return t;
}

double DensityMatrix::fidelity(const QuditRegister& pure) const {
    if (pure.dim() != dim_) throw argument_error("state shape mismatch");
    cdouble value{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) {
        cdouble row{0.0, 0.0};
        for (std::size_t j = 0; j < dim_; ++j) row += rho_[i * dim_ + j] * pure.amp(j);
        value += std::conj(pure.amp(i)) * row;
    }
    return std::clamp(value.real(), 0.0, 1.0);
}

std::vector<double> DensityMatrix::site_distribution(int site) const {
    if (site < 0 || site >= n_sites_) throw argument_error("site index out of range");
    std::size_t stride = 1;
    for (int i = n_sites_ - 1; i > site; --i) stride *= static_cast<std::size_t>(d_);
    std::vector<double> p(static_cast<std::size_t>(d_), 0.0);
    for (std::size_t i = 0; i < dim_; ++i)
        p[i / stride % static_cast<std::size_t>(d_)] += rho_[i * dim_ + i].real();
    return p;
}

double DensityMatrix::routing_population(int site) const {
    const auto p = site_distribution(site);
    double pop = 0.0;
    for (std::size_t l = 2; l < p.size(); ++l) pop += p[l];
    return pop;
}

bool master_backend_fits(int n_sites, int d) {
    double amps = 1.0;
    for (int i = 0; i < n_sites; ++i) amps *= static_cast<double>(d);
    return amps <= 1024.0;
}

namespace {

// Site-expanded collapse channel.
struct SiteOp {
    int site;
    std::size_t stride;
    int level;
    double rate;
    bool lowering;
};

struct DissipationContext {
    std::vector<SiteOp> ops;
    std::vector<double> gamma;  // per basis index: total decay rate
    std::vector<std::vector<int>> level_of;  // [site][index]
};

DissipationContext make_context(int n_sites, int d, std::size_t dim,
                                std::span<const CollapseOp> protos) {
    DissipationContext ctx;
    ctx.level_of.assign(static_cast<std::size_t>(n_sites), {});
    std::size_t stride = dim;
    for (int s = 0; s < n_sites; ++s) {
        stride /= static_cast<std::size_t>(d);
        auto& lv = ctx.level_of[static_cast<std::size_t>(s)];
        lv.resize(dim);
        for (std::size_t i = 0; i < dim; ++i)
            lv[i] = static_cast<int>(i / stride % static_cast<std::size_t>(d));
        for (const auto& op : protos)
            ctx.ops.push_back({s, stride, op.level, op.rate, op.lowering});
    }
    ctx.gamma.assign(dim, 0.0);
    for (const auto& op : ctx.ops)
        for (std::size_t i = 0; i < dim; ++i)
            if (ctx.level_of[static_cast<std::size_t>(op.site)][i] == op.level)
                ctx.gamma[i] += op.rate;
    return ctx;
}

// Lindblad right-hand side with H = 0.
void lindblad_rhs(const DissipationContext& ctx, std::size_t dim,
                  const std::vector<cdouble>& rho, std::vector<cdouble>& out) {
    for (std::size_t i = 0; i < dim; ++i) {
        const double gi = ctx.gamma[i];
        for (std::size_t j = 0; j < dim; ++j)
            out[i * dim + j] = -0.5 * (gi + ctx.gamma[j]) * rho[i * dim + j];
    }
    for (const auto& op : ctx.ops) {
        const auto& lv = ctx.level_of[static_cast<std::size_t>(op.site)];
        for (std::size_t i = 0; i < dim; ++i) {
            if (lv[i] != op.level) continue;
            const std::size_t ii = op.lowering ? i - op.stride : i;
            for (std::size_t j = 0; j < dim; ++j) {
                if (lv[j] != op.level) continue;
                const std::size_t jj = op.lowering ? j - op.stride : j;
                out[ii * dim + jj] += op.rate * rho[i * dim + j];
            }
        }
    }
}

void rk4_step(const DissipationContext& ctx, std::size_t dim, std::vector<cdouble>& rho,
              double dt, std::vector<cdouble>& k1, std::vector<cdouble>& k2,
              std::vector<cdouble>& k3, std::vector<cdouble>& k4,
              std::vector<cdouble>& tmp) {
    const std::size_t size = dim * dim;
    lindblad_rhs(ctx, dim, rho, k1);
    for (std::size_t i = 0; i < size; ++i) tmp[i] = rho[i] + 0.5 * dt * k1[i];
    lindblad_rhs(ctx, dim, tmp, k2);
    for (std::size_t i = 0; i < size; ++i) tmp[i] = rho[i] + 0.5 * dt * k2[i];
    lindblad_rhs(ctx, dim, tmp, k3);
    for (std::size_t i = 0; i < size; ++i) tmp[i] = rho[i] + dt * k3[i];
    lindblad_rhs(ctx, dim, tmp, k4);
    for (std::size_t i = 0; i < size; ++i)
        rho[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

// Unitary conjugation with a sparse gate matrix (at most two entries per
// column), built by driving the state-vector kernels with basis states.
struct SparseGate {
    struct Entry {
        std::size_t row;
        cdouble value;
    };
    std::vector<std::vector<Entry>> columns;
};

SparseGate sparse_gate(const GateRecord& gate, int n_sites, const BusConfig& cfg) {
    SparseGate sg;
    const std::size_t dim = [&] {
        std::size_t v = 1;
        for (int i = 0; i < n_sites; ++i) v *= static_cast<std::size_t>(cfg.d);
        return v;
    }();
    sg.columns.resize(dim);
    QuditRegister basis_state(n_sites, cfg.d);
    for (std::size_t col = 0; col < dim; ++col) {
        auto& amps = basis_state.data();
        std::fill(amps.begin(), amps.end(), cdouble{0.0, 0.0});
        amps[col] = 1.0;
        apply_gate(basis_state, gate, cfg);
        for (std::size_t row = 0; row < dim; ++row)
            if (amps[row] != cdouble{0.0, 0.0}) sg.columns[col].push_back({row, amps[row]});
    }
    return sg;
}

void conjugate(DensityMatrix& rho, const SparseGate& gate) {
    const std::size_t dim = rho.dim();
    std::vector<cdouble> left(dim * dim, cdouble{0.0, 0.0});
    const auto& in = rho.data();
    for (std::size_t col = 0; col < dim; ++col)
        for (const auto& e : gate.columns[col])
            for (std::size_t j = 0; j < dim; ++j)
                left[e.row * dim + j] += e.value * in[col * dim + j];
    auto& out = rho.data();
    std::fill(out.begin(), out.end(), cdouble{0.0, 0.0});
    for (std::size_t col = 0; col < dim; ++col)
        for (const auto& e : gate.columns[col])
            for (std::size_t i = 0; i < dim; ++i)
                out[i * dim + e.row] += std::conj(e.value) * left[i * dim + col];
}

double min_positive_duration(const Circuit& circuit, const NoiseModel& model) {
    double best = kNever;
    for (const auto& g : circuit.gates) {
        const double t = model.duration_of(g.kind);
        if (t > 0.0) best = std::min(best, t);
    }
    return best;
}

}  // namespace

void dissipate_master(DensityMatrix& rho, std::span<const CollapseOp> ops, double time,
                      double dt) {
    if (ops.empty() || time <= 0.0) return;
    const auto ctx = make_context(rho.n_sites(), rho.d(), rho.dim(),
                                  std::span<const CollapseOp>(ops));
    const int steps = std::max(1, static_cast<int>(std::llround(time / dt)));
    const double h = time / steps;
    const std::size_t size = rho.dim() * rho.dim();
    std::vector<cdouble> k1(size), k2(size), k3(size), k4(size), tmp(size);
    for (int s = 0; s < steps; ++s) rk4_step(ctx, rho.dim(), rho.data(), h, k1, k2, k3, k4, tmp);
}

void apply_leakage_master(DensityMatrix& rho, int site, double eps) {
    if (eps == 0.0) return;
    if (eps < 0.0 || eps >= 1.0) throw argument_error("leakage must lie in [0, 1)");
    const std::size_t dim = rho.dim();
    const int d = rho.d();
    std::size_t stride = 1;
    for (int i = rho.n_sites() - 1; i > site; --i) stride *= static_cast<std::size_t>(d);
    auto level = [&](std::size_t idx) {
        return static_cast<int>(idx / stride % static_cast<std::size_t>(d));
    };
    const auto in = rho.data();  // copy
    auto& out = rho.data();
    const double keep = std::sqrt(1.0 - eps);
    for (std::size_t i = 0; i < dim; ++i) {
        const double ci = level(i) < d - 1 ? keep : 1.0;
        for (std::size_t j = 0; j < dim; ++j) {
            const double cj = level(j) < d - 1 ? keep : 1.0;
            out[i * dim + j] = ci * cj * in[i * dim + j];
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        if (level(i) >= d - 1) continue;
        for (std::size_t j = 0; j < dim; ++j) {
            if (level(j) >= d - 1) continue;
            out[(i + stride) * dim + (j + stride)] += eps * in[i * dim + j];
        }
    }
}

void apply_leakage_sampled(QuditRegister& psi, int site, double eps, Xoshiro256StarStar& rng) {
    if (eps == 0.0) return;
    const int d = psi.d();
    const std::size_t stride = psi.stride(site);
    double p_transfer = 0.0;
    for (std::size_t i = 0; i < psi.dim(); ++i)
        if (psi.level_at(i, site) < d - 1) p_transfer += eps * std::norm(psi.amp(i));
    auto& amps = psi.data();
    if (rng.uniform01() < p_transfer) {
        std::vector<cdouble> next(psi.dim(), cdouble{0.0, 0.0});
        for (std::size_t i = 0; i < psi.dim(); ++i)
            if (psi.level_at(i, site) < d - 1) next[i + stride] = amps[i];
        amps = std::move(next);
    } else {
        const double keep = std::sqrt(1.0 - eps);
        for (std::size_t i = 0; i < psi.dim(); ++i)
            if (psi.level_at(i, site) < d - 1) amps[i] *= keep;
    }
    psi.normalize();
}

DensityMatrix evolve_master(const QuditRegister& initial, const Circuit& circuit,
                            const NoiseModel& model) {
    validate_circuit(circuit);
    model.validate();
    if (initial.n_sites() != circuit.n_sites || initial.d() != circuit.cfg.d)
        throw argument_error("register shape does not match circuit");
    if (!master_backend_fits(circuit.n_sites, circuit.cfg.d))
        throw resource_error(
            "density-matrix evolution limited to 1024 amplitudes; use trajectories");

    DensityMatrix rho(initial);
    const auto protos = collapse_operators(circuit.cfg.d, model);
    const double min_dur = min_positive_duration(circuit, model);
    const double dt = finite_time(min_dur) ? min_dur / 20.0 : 0.0;

    const auto sched = schedule(circuit);
    for (const auto& moment : sched.moments) {
        double window = 0.0;
        for (int gi : moment) {
            const auto& gate = circuit.gates[static_cast<std::size_t>(gi)];
            conjugate(rho, sparse_gate(gate, circuit.n_sites, circuit.cfg));
            if (model.leak_eps > 0.0 && is_routing_primitive(gate.kind))
                apply_leakage_master(rho, gate.acted_site(), model.leak_eps);
            window = std::max(window, model.duration_of(gate.kind));
        }
        if (window > 0.0 && !protos.empty()) dissipate_master(rho, protos, window, dt);
    }
    return rho;
}

namespace {

struct TrajectoryRun {
    double fidelity = 0.0;
    std::vector<double> routing_pop;
};

TrajectoryRun run_single_trajectory(const QuditRegister& initial, const Circuit& circuit,
                                    const NoiseModel& model, const QuditRegister& ideal,
                                    const DissipationContext& ctx,
                                    const std::vector<double>& decay, double dt,
                                    const Schedule& sched, Xoshiro256StarStar rng) {
    QuditRegister psi = initial;
    const std::size_t dim = psi.dim();

    auto window = [&](double duration) {
        const int steps = std::max(1, static_cast<int>(std::llround(duration / dt)));
        auto& amps = psi.data();
        for (int s = 0; s < steps; ++s) {
            double weighted = 0.0;
            for (std::size_t i = 0; i < dim; ++i)
                weighted += ctx.gamma[i] * std::norm(amps[i]);
            const double p_jump = weighted * dt;
            if (rng.uniform01() < p_jump) {
                // Pick the collapse channel proportionally to its weight.
                double total = 0.0;
                std::vector<double> w(ctx.ops.size(), 0.0);
                for (std::size_t o = 0; o < ctx.ops.size(); ++o) {
                    const auto& op = ctx.ops[o];
                    const auto& lv = ctx.level_of[static_cast<std::size_t>(op.site)];
                    double sum = 0.0;
                    for (std::size_t i = 0; i < dim; ++i)
                        if (lv[i] == op.level) sum += std::norm(amps[i]);
                    w[o] = op.rate * sum;
                    total += w[o];
                }
                double pick = rng.uniform01() * total;
                std::size_t chosen = 0;
                while (chosen + 1 < w.size() && pick >= w[chosen]) {
                    pick -= w[chosen];
                    ++chosen;
                }
                const auto& op = ctx.ops[chosen];
                const auto& lv = ctx.level_of[static_cast<std::size_t>(op.site)];
                std::vector<cdouble> next(dim, cdouble{0.0, 0.0});
                for (std::size_t i = 0; i < dim; ++i)
                    if (lv[i] == op.level)
                        next[op.lowering ? i - op.stride : i] = amps[i];
                amps = std::move(next);
                psi.normalize();
            } else {
                for (std::size_t i = 0; i < dim; ++i) amps[i] *= decay[i];
                psi.normalize();
            }
        }
    };

    for (const auto& moment : sched.moments) {
        double duration = 0.0;
        for (int gi : moment) {
            const auto& gate = circuit.gates[static_cast<std::size_t>(gi)];
            apply_gate(psi, gate, circuit.cfg);
            if (model.leak_eps > 0.0 && is_routing_primitive(gate.kind))
                apply_leakage_sampled(psi, gate.acted_site(), model.leak_eps, rng);
            duration = std::max(duration, model.duration_of(gate.kind));
        }
        if (duration > 0.0 && !ctx.ops.empty()) window(duration);
    }

    TrajectoryRun run;
    run.fidelity = fidelity(ideal, psi);
    run.routing_pop.reserve(static_cast<std::size_t>(psi.n_sites()));
    for (int site = 0; site < psi.n_sites(); ++site)
        run.routing_pop.push_back(routing_population(psi, site));
    return run;
}

}  // namespace

TrajectoryResult evolve_trajectories(const QuditRegister& initial, const Circuit& circuit,
                                     const NoiseModel& model, const TrajectoryConfig& config,
                                     const QuditRegister& ideal) {
    validate_circuit(circuit);
    model.validate();
    if (config.n_traj < 1) throw argument_error("need at least one trajectory");
    if (initial.n_sites() != circuit.n_sites || initial.d() != circuit.cfg.d)
        throw argument_error("register shape does not match circuit");

    const auto protos = collapse_operators(circuit.cfg.d, model);
    const auto sched = schedule(circuit);

    // Without any stochastic channel each trajectory is the same pure run.
    const bool deterministic = protos.empty() && model.leak_eps == 0.0;
    const int n_traj = deterministic ? 1 : config.n_traj;

    const auto ctx = make_context(circuit.n_sites, circuit.cfg.d, initial.dim(), protos);
    const double min_dur = min_positive_duration(circuit, model);
    const double dt = config.dt > 0.0 ? config.dt
                                      : (finite_time(min_dur) ? min_dur / 20.0 : 1.0);
    std::vector<double> decay(initial.dim());
    for (std::size_t i = 0; i < initial.dim(); ++i)
        decay[i] = std::exp(-0.5 * ctx.gamma[i] * dt);

    double sum = 0.0, sum_sq = 0.0;
    std::vector<double> pop_sum(static_cast<std::size_t>(initial.n_sites()), 0.0);
    for (int t = 0; t < n_traj; ++t) {
        const auto run = run_single_trajectory(initial, circuit, model, ideal, ctx, decay, dt,
                                               sched, Xoshiro256StarStar::stream(config.seed,
                                                                                 static_cast<std::uint64_t>(t)));
        sum += run.fidelity;
        sum_sq += run.fidelity * run.fidelity;
        for (std::size_t s = 0; s < pop_sum.size(); ++s) pop_sum[s] += run.routing_pop[s];
    }

    TrajectoryResult result;
    result.n_traj = n_traj;
    result.mean_fidelity = sum / n_traj;
    if (n_traj > 1) {
        const double var =
            std::max(0.0, (sum_sq - sum * sum / n_traj) / static_cast<double>(n_traj - 1));
        result.stderr_fidelity = std::sqrt(var / n_traj);
    }
    result.mean_routing_pop.resize(pop_sum.size());
    for (std::size_t s = 0; s < pop_sum.size(); ++s) {
        result.mean_routing_pop[s] = pop_sum[s] / n_traj;
        result.max_routing_pop = std::max(result.max_routing_pop, result.mean_routing_pop[s]);
    }
    return result;
}

namespace {

struct CircuitFidelity {
    double fid = 0.0, se = 0.0, pop_max = 0.0;
};

CircuitFidelity noisy_fidelity(const Circuit& circuit, const NoiseModel& model,
                               const TrajectoryConfig& config, const QuditRegister& probe,
                               const QuditRegister& ideal) {
    CircuitFidelity out;
    if (master_backend_fits(circuit.n_sites, circuit.cfg.d)) {
        const auto rho = evolve_master(probe, circuit, model);
        out.fid = rho.fidelity(ideal);
        for (int site = 0; site < circuit.n_sites; ++site)
            out.pop_max = std::max(out.pop_max, rho.routing_population(site));
    } else {
        const auto res = evolve_trajectories(probe, circuit, model, config, ideal);
        out.fid = res.mean_fidelity;
        out.se = res.stderr_fidelity;
        out.pop_max = res.max_routing_pop;
    }
    return out;
}

}  // namespace

std::vector<SweepRow> distance_sweep(int l_min, int l_max, int d, const NoiseModel& model,
                                     const TrajectoryConfig& config) {
    if (l_min < 1 || l_max < l_min) throw argument_error("invalid path-length range");
    std::vector<SweepRow> rows;
    for (int len = l_min; len <= l_max; ++len) {
        const int n_sites = len + 1;
        Path path(static_cast<std::size_t>(n_sites));
        for (int i = 0; i < n_sites; ++i) path[static_cast<std::size_t>(i)] = i;

        const auto routed = build_routed_cnot(n_sites, d, path, 1);
        const auto swap = build_swap_baseline_native(n_sites, d, path);

        QuditRegister probe(n_sites, d);
        apply_single(probe, 0, u2_h());
        QuditRegister ideal = probe;
        apply_cx(ideal, 0, n_sites - 1);

        const auto r = noisy_fidelity(routed, model, config, probe, ideal);
        const auto s = noisy_fidelity(swap, model, config, probe, ideal);
        rows.push_back({len, r.fid, r.se, s.fid, s.se, r.pop_max});
    }
    return rows;
}

std::vector<WinCell> threshold_scan(std::span<const double> durations,
                                    std::span<const double> multipliers, int len, int d,
                                    const NoiseModel& model, const TrajectoryConfig& config) {
    if (len < 1) throw argument_error("path length must be at least 1");
    const int n_sites = len + 1;
    Path path(static_cast<std::size_t>(n_sites));
    for (int i = 0; i < n_sites; ++i) path[static_cast<std::size_t>(i)] = i;
    const auto routed = build_routed_cnot(n_sites, d, path, 1);
    const auto swap = build_swap_baseline_native(n_sites, d, path);

    QuditRegister probe(n_sites, d);
    apply_single(probe, 0, u2_h());
    QuditRegister ideal = probe;
    apply_cx(ideal, 0, n_sites - 1);

    std::vector<WinCell> cells;
    for (double duration : durations) {
        for (double multiplier : multipliers) {
            const auto lifted = with_higher_level_lifetimes_scaled(model, multiplier);
            const auto routed_model = with_routed_durations_scaled(lifted, duration);
            const auto r = noisy_fidelity(routed, routed_model, config, probe, ideal);
            const auto s = noisy_fidelity(swap, lifted, config, probe, ideal);
            WinCell cell;
            cell.duration = duration;
            cell.multiplier = multiplier;
            cell.win = r.fid - s.fid;
            cell.se = std::sqrt(r.se * r.se + s.se * s.se);
            cell.fid_routed = r.fid;
            cell.fid_swap = s.fid;
            cells.push_back(cell);
        }
    }
    return cells;
}

}  // namespace qsr
