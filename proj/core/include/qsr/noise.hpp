#pragma once

#include <limits>
#include <span>
#include <vector>

#include "qsr/builders.hpp"
#include "qsr/circuit.hpp"
#include "qsr/rng.hpp"

namespace qsr {

inline constexpr double kNever = std::numeric_limits<double>::infinity();

/// Open-system parameters. Relaxation and dephasing ladders are indexed by
/// level (entry 0 belongs to level 1); levels past the end of a ladder reuse
/// its last entry. Infinite times switch the corresponding channel off.
struct NoiseModel {
    std::vector<double> t1;    // level l -> l-1 relaxation times
    std::vector<double> tphi;  // level-resolved pure dephasing times
    double leak_eps = 0.0;     // upward transfer probability after routing primitives
    double routing_time = 1.0;
    double target_time = 1.0;
    double swap_time = 3.0;  // one native SWAP, reflecting its 3-CX decomposition

    static NoiseModel ideal();
    static NoiseModel t1_limited(std::vector<double> ladder);

    double relaxation_time(int level) const;
    double dephasing_time(int level) const;
    double duration_of(GateKind kind) const;
    void validate() const;
};

/// Scales routing_time and target_time; swap_time is left alone so the
/// baseline is unaffected when scanning routed primitive speed.
NoiseModel with_routed_durations_scaled(const NoiseModel& model, double scale);

/// Multiplies t1/tphi of levels >= 2 by `multiplier`.
NoiseModel with_higher_level_lifetimes_scaled(const NoiseModel& model, double multiplier);

/// Site-local collapse channel prototype: sqrt(rate) * |l-1><l| for
/// relaxation, sqrt(rate) * |l><l| for dephasing (rate 1/(2*tphi)).
struct CollapseOp {
    int level = 1;
    double rate = 0.0;
    bool lowering = true;
};

std::vector<CollapseOp> collapse_operators(int d, const NoiseModel& model);

/// Dense density operator over the same basis ordering as QuditRegister.
class DensityMatrix {
public:
    explicit DensityMatrix(const QuditRegister& pure);

    int n_sites() const { return n_sites_; }
    int d() const { return d_; }
    std::size_t dim() const { return dim_; }
    cdouble& at(std::size_t i, std::size_t j) { return rho_[i * dim_ + j]; }
    const cdouble& at(std::size_t i, std::size_t j) const { return rho_[i * dim_ + j]; }
    std::vector<cdouble>& data() { return rho_; }
    const std::vector<cdouble>& data() const { return rho_; }

    double trace() const;
    double fidelity(const QuditRegister& pure) const;  // <psi|rho|psi>
    std::vector<double> site_distribution(int site) const;
    double routing_population(int site) const;

private:
    int n_sites_, d_;
    std::size_t dim_;
    std::vector<cdouble> rho_;
};

/// Hard backend rule: master equation when d^n <= 1024, else trajectories.
bool master_backend_fits(int n_sites, int d);

/// Lindblad evolution: per scheduled moment, gate unitaries (plus the
/// optional leakage channel after routing primitives), then free dissipation
/// for the moment's duration integrated by fixed-step RK4 with
/// dt = min gate duration / 20. Refuses instances above 1024 amplitudes.
DensityMatrix evolve_master(const QuditRegister& initial, const Circuit& circuit,
                            const NoiseModel& model);

struct TrajectoryConfig {
    int n_traj = 500;
    std::uint64_t seed = 0;
    double dt = 0.0;  // 0 = auto: min gate duration / 20
};

struct TrajectoryResult {
    double mean_fidelity = 0.0;
    double stderr_fidelity = 0.0;
    std::vector<double> mean_routing_pop;  // per site
    double max_routing_pop = 0.0;
    int n_traj = 0;
};

/// Monte Carlo wave functions: non-Hermitian decay plus jump sampling per dt
/// window. Trajectory t draws from stream (seed, t); the reduction is a plain
/// running sum, so results are independent of evaluation order.
TrajectoryResult evolve_trajectories(const QuditRegister& initial, const Circuit& circuit,
                                     const NoiseModel& model, const TrajectoryConfig& config,
                                     const QuditRegister& ideal);

struct SweepRow {
    int len = 0;
    double fid_routed = 0.0, se_routed = 0.0;
    double fid_swap = 0.0, se_swap = 0.0;
    double pop_routing_max = 0.0;
};

/// Routed CNOT vs layout-restoring SWAP baseline on a chain, evolved under
/// `model` with the control prepared in (|0>+|1>)/sqrt(2). Fidelities are
/// against the ideal CX output; backend per master_backend_fits.
std::vector<SweepRow> distance_sweep(int l_min, int l_max, int d, const NoiseModel& model,
                                     const TrajectoryConfig& config);

struct WinCell {
    double duration = 0.0, multiplier = 0.0;
    double win = 0.0, se = 0.0;
    double fid_routed = 0.0, fid_swap = 0.0;
};

/// Win = routed fidelity - SWAP fidelity over a grid of routed primitive
/// duration scales and higher-level lifetime multipliers.
std::vector<WinCell> threshold_scan(std::span<const double> durations,
                                    std::span<const double> multipliers, int len, int d,
                                    const NoiseModel& model, const TrajectoryConfig& config);

// Exposed pieces for direct checks.
void dissipate_master(DensityMatrix& rho, std::span<const CollapseOp> ops, double time,
                      double dt);
void apply_leakage_master(DensityMatrix& rho, int site, double eps);
void apply_leakage_sampled(QuditRegister& psi, int site, double eps, Xoshiro256StarStar& rng);

}  // namespace qsr
