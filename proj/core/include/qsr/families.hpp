#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qsr/errors.hpp"

namespace qsr {

/// Two-qubit interaction list of one benchmark circuit family. Single-qubit
/// gates are omitted throughout; they never generate transport demand.
struct LogicalCircuit {
    std::string family;
    int n = 0;
    std::vector<std::pair<int, int>> gates;
};

/// QFT: controlled-phase pairs (i, j) for i < j in standard order.
LogicalCircuit gen_qft(int n);

/// Mirror stress test: pairs (i, n-1-i), all nominally simultaneous. n even.
LogicalCircuit gen_mirror(int n);

/// One QAOA cost layer on a random degree-regular graph, generated by seeded
/// stub pairing with whole-sample rejection of self-loops and multi-edges.
LogicalCircuit gen_qaoa(int n, int degree, std::uint64_t seed);

/// One Grover-style iteration: oracle and diffusion multi-controlled-Z
/// blocks, each lowered to two-qubit pairs with the recursive no-ancilla
/// scheme below. The marked state only moves single-qubit conjugations, so
/// it never changes the pair list.
LogicalCircuit gen_amplitude(int n, std::uint64_t marked = ~std::uint64_t{0});

/// Two-qubit pair list of a multi-controlled U on `controls` + `target`,
/// using no qubits beyond those named. The rotation peels its last control
/// (CV / MCX / CV+ / MCX / MC-sqrt-V, pivot = last control); each MCX block
/// borrows idle register qubits, via the dirty-qubit V-chain when at least
/// m-2 are idle and otherwise by splitting through one idle relay (larger
/// half first). Idle qubits are borrowed nearest the last control first,
/// ties to the lower index. One or two controls emit the plain CX / Toffoli
/// pair structure.
std::vector<std::pair<int, int>> multi_controlled_pairs(const std::vector<int>& controls,
                                                        int target);

using LogicalLayer = std::vector<std::pair<int, int>>;

/// Greedy earliest-fit layering: gates keep per-qubit order and land in the
/// first layer where both qubits are free.
std::vector<LogicalLayer> layerize(const LogicalCircuit& circuit);

}  // namespace qsr
