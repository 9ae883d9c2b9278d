#pragma once

#include <span>
#include <vector>

#include "qsr/circuit.hpp"

namespace qsr {

using Path = std::vector<int>;

/// Nonlocal CX over a hardware path via bus k: lift, propagate, CXR,
/// inverse propagation, inverse lift. Exactly 2L+1 gates for |path| = L+1.
/// n_buses defaults to k; pass a larger value to embed in a multi-bus layer.
Circuit build_routed_cnot(int n_sites, int d, const Path& path, int k = 1, int n_buses = -1);

/// SWAP-transport baseline with every SWAP expanded into 3 CX gates
/// (exact at d = 2): move the control next to the target, one CX, move back.
Circuit build_swap_baseline(int n_sites, int d, const Path& path);

/// Same baseline with native two-site swap records, used by noisy runs
/// where a SWAP is one timed primitive rather than three CX gates.
Circuit build_swap_baseline_native(int n_sites, int d, const Path& path);

/// Transport bookkeeping for SWAP routing over a path of length L:
/// L swaps at 3 CNOT-equivalent layers each.
int swap_transport_cost(int path_len);

/// Boolean fan-in: one arm per control, all arms ending at a common target,
/// each on its own bus. Forward stages run per arm with last hops into the
/// shared target serialized in ascending bus order, then a single
/// Boolean-routed target gate, then the mirrored cleanup. For equal arm
/// lengths L and K = 3 the scheduled depth is 2L+5.
Circuit build_routed_fanin(int n_sites, int d, const std::vector<Path>& arms,
                           const std::vector<int>& buses, std::vector<std::uint8_t> table,
                           const Unitary2& u);

// Truth tables over K bus bits; entry index carries x_k at bit (k-1).
std::vector<std::uint8_t> table_constant(int n_buses, bool value);
std::vector<std::uint8_t> table_projection(int n_buses, int k);
std::vector<std::uint8_t> table_conjunction(int n_buses, std::span<const int> active);
std::vector<std::uint8_t> table_disjunction(int n_buses, std::span<const int> active);
std::vector<std::uint8_t> table_threshold(int n_buses, std::span<const int> active, int t);
std::vector<std::uint8_t> table_parity(int n_buses, std::span<const int> active);

/// Reference action of the target unitary controlled by g over the
/// computational levels of the control sites. Applied basis state by basis
/// state, independent of the routing machinery; serves as the oracle that
/// routed circuits are verified against.
void apply_ideal_fanin(QuditRegister& reg, std::span<const int> controls, int target,
                       std::span<const std::uint8_t> table, const Unitary2& u);

}  // namespace qsr
