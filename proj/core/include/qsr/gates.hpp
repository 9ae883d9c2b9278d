#pragma once

#include <cstdint>
#include <span>

#include "qsr/bus_algebra.hpp"
#include "qsr/register.hpp"
#include "qsr/unitary2.hpp"

namespace qsr {

/// U on the computational pair {|0>, |1>} of one site; higher levels untouched.
void apply_single(QuditRegister& reg, int site, const Unitary2& u);

/// Cyclic level shift x -> (x + delta) mod d.
void apply_shift(QuditRegister& reg, int site, int delta);

/// Nearest-neighbor CNOT: flips target {0,1} when the control level is
/// exactly 1. Control levels >= 2 act as identity; this is the unitary
/// extension used by the SWAP baseline, not something the protocol relies on.
void apply_cx(QuditRegister& reg, int control, int target);

/// Full d-level exchange of two sites.
void apply_swap(QuditRegister& reg, int a, int b);

/// Controlled bus load: target y -> y + sign * f_0(control) * Delta_k  (mod d).
/// The control condition reads the logical digit of the control level, which
/// makes the operator a total permutation of the two-site product basis.
void apply_cbl(QuditRegister& reg, int control, int target, int k, int sign,
               const BusConfig& cfg);

/// Bus-controlled propagation: target y -> y + sign * f_k(source) * Delta_k (mod d).
void apply_bcp(QuditRegister& reg, int source, int target, int k, int sign,
               const BusConfig& cfg);

/// U on the lifted block {|s>, |s+1>}; identity elsewhere. s must be an
/// admissible routing offset (even, below 2^(K+1)) with s+1 < d.
void apply_block(QuditRegister& reg, int site, int block_offset, const Unitary2& u,
                 const BusConfig& cfg);

/// Routing-controlled unitary: U^{f_k(s)} on each lifted block {|s>, |s+1>},
/// identity on the complement of the admissible routing subspace.
void apply_cur(QuditRegister& reg, int site, int k, const Unitary2& u, const BusConfig& cfg);

/// CXR = routing-controlled X, the target gate of the nonlocal CNOT.
void apply_cxr(QuditRegister& reg, int site, int k, const BusConfig& cfg);

/// Boolean-routed target: U^{g(f_1(s),...,f_K(s))} per lifted block. The
/// table has 2^K entries indexed with bus 1 as the least-significant bit,
/// i.e. table[s >> 1] decides block s.
void apply_boolean_target(QuditRegister& reg, int site, std::span<const std::uint8_t> table,
                          const Unitary2& u, const BusConfig& cfg);

}  // namespace qsr
