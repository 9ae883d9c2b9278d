#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qsr/bus_algebra.hpp"
#include "qsr/gates.hpp"

namespace qsr {

enum class GateKind : std::uint8_t {
    SingleSite,
    CX,
    Shift,
    CBL,
    BCP,
    CXR,
    CUR,
    Block,
    BooleanTarget,
    Swap,
};

std::string to_string(GateKind kind);
bool is_two_site(GateKind kind);

/// Gates that touch the routing subspace; the noise model attaches the
/// optional leakage channel after these.
bool is_routing_primitive(GateKind kind);

struct GateRecord {
    GateKind kind = GateKind::SingleSite;
    std::array<int, 2> sites{0, -1};
    int bus = 0;           // CBL / BCP / CXR / CUR
    int sign = 1;          // CBL / BCP
    int delta = 0;         // Shift
    int block_offset = 0;  // Block
    Unitary2 unitary{};    // SingleSite / CUR / Block / BooleanTarget
    std::vector<std::uint8_t> table;  // BooleanTarget

    /// Site whose levels the gate changes (the second site for two-site kinds).
    int acted_site() const { return sites[1] >= 0 ? sites[1] : sites[0]; }
};

GateRecord make_single(int site, const Unitary2& u);
GateRecord make_cx(int control, int target);
GateRecord make_shift(int site, int delta);
GateRecord make_cbl(int control, int target, int k, int sign);
GateRecord make_bcp(int source, int target, int k, int sign);
GateRecord make_cxr(int site, int k);
GateRecord make_cur(int site, int k, const Unitary2& u);
GateRecord make_block(int site, int block_offset, const Unitary2& u);
GateRecord make_boolean_target(int site, std::vector<std::uint8_t> table, const Unitary2& u);
GateRecord make_swap(int a, int b);

/// Ordered gate list over a fixed register shape and bus configuration.
struct Circuit {
    int n_sites;
    BusConfig cfg;  // cfg.d is the local dimension
    std::vector<GateRecord> gates;
};

/// Checks site ranges, site distinctness and bus bounds of every gate.
void validate_circuit(const Circuit& c);

void apply_gate(QuditRegister& reg, const GateRecord& g, const BusConfig& cfg);

/// Applies the gate list in order; register shape must match the circuit.
void run(QuditRegister& reg, const Circuit& c);

/// Moments of site-disjoint gates from greedy as-soon-as-possible packing;
/// per-site gate order is preserved. Depth is the moment count.
struct Schedule {
    std::vector<std::vector<int>> moments;  // gate indices, ascending
    int depth() const { return static_cast<int>(moments.size()); }
};

Schedule schedule(const Circuit& c);

/// Stable serialization {kind, sites, k, sign, unitary?, table?} per gate,
/// used by golden-file tests.
std::string circuit_json(const Circuit& c);

}  // namespace qsr
