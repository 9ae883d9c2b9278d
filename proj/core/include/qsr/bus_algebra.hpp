#pragma once

#include <vector>

#include "qsr/errors.hpp"

namespace qsr {

/// Device-wide bus configuration: local dimension d and bus count K.
/// Bus k (1-based, k = 1..K) occupies the binary offset 2^k; digit 0 of a
/// qudit value is the resident logical bit and is never a bus.
///
/// Supporting K buses without modular aliasing needs d >= 2^(K+1); the
/// constructor rejects anything smaller. K = 0 is a plain qubit-style
/// configuration and is allowed so SWAP-baseline circuits can share the
/// register machinery.
struct BusConfig {
    int d = 2;
    int n_buses = 0;

    BusConfig(int d_, int n_buses_);

    /// Offsets Delta_k = 2^k for k = 1..K, strictly increasing from 2.
    std::vector<int> offsets() const;

    /// Delta_k for one bus; k must be in 1..K.
    int offset(int k) const;

    /// Largest admissible routing value, 2^(K+1) - 1.
    int max_value() const { return (1 << (n_buses + 1)) - 1; }
};

/// Smallest local dimension supporting K buses: 2^(K+1).
int min_dimension(int n_buses);

/// Largest bus count a d-level system supports: floor(log2 d) - 1.
int max_buses(int d);

/// A value is admissible when every binary digit above position K is zero.
bool is_admissible(int value, int n_buses);

/// Aggregate value x0 + sum_k bus_bits[k-1] * 2^k. bus_bits has length K.
int encode(int x0, const std::vector<int>& bus_bits, const BusConfig& cfg);

/// Digit read f_k(value) = floor(value / 2^k) mod 2; k = 0 is the logical bit.
int extract(int value, int k, const BusConfig& cfg);

/// Set the digits of `buses` (each currently clear) by adding offsets.
int bus_add(int value, const std::vector<int>& buses, const BusConfig& cfg);

/// Clear the digits of `buses` (each currently set) by subtracting offsets.
int bus_remove(int value, const std::vector<int>& buses, const BusConfig& cfg);

/// Unchecked digit read, usable on any integer level.
inline int digit(int value, int k) { return (value >> k) & 1; }

}  // namespace qsr
