#include "qsr/bus_algebra.hpp"

#include <bit>
#include <string>

namespace qsr {

namespace {

void check_bus_list(const std::vector<int>& buses, const BusConfig& cfg) {
    unsigned seen = 0;
    for (int k : buses) {
        if (k < 1 || k > cfg.n_buses)
            throw argument_error("bus index " + std::to_string(k) + " outside 1.." +
                                 std::to_string(cfg.n_buses));
        if (seen & (1u << k))
            throw argument_error("duplicate bus index " + std::to_string(k));
        seen |= 1u << k;
    }
}

}  // namespace

BusConfig::BusConfig(int d_, int n_buses_) : d(d_), n_buses(n_buses_) {
    if (d < 2) throw config_error("local dimension must be at least 2");
    if (n_buses < 0) throw config_error("bus count must be nonnegative");
    if (n_buses >= 30) throw config_error("bus count out of range");
    if (d < min_dimension(n_buses))
        throw config_error("d=" + std::to_string(d) + " cannot host " +
                           std::to_string(n_buses) + " buses; need d >= " +
                           std::to_string(min_dimension(n_buses)));
}

std::vector<int> BusConfig::offsets() const {
    std::vector<int> out(static_cast<std::size_t>(n_buses));
    for (int k = 1; k <= n_buses; ++k) out[static_cast<std::size_t>(k - 1)] = 1 << k;
    return out;
}

int BusConfig::offset(int k) const {
    if (k < 1 || k > n_buses)
        throw argument_error("bus index " + std::to_string(k) + " outside 1.." +
                             std::to_string(n_buses));
    return 1 << k;
}

int min_dimension(int n_buses) {
    if (n_buses < 0) throw argument_error("bus count must be nonnegative");
    return 1 << (n_buses + 1);
}

int max_buses(int d) {
    if (d < 2) throw argument_error("local dimension must be at least 2");
    return std::bit_width(static_cast<unsigned>(d)) - 2;  // floor(log2 d) - 1
}

bool is_admissible(int value, int n_buses) {
    return value >= 0 && (value >> (n_buses + 1)) == 0;
}

int encode(int x0, const std::vector<int>& bus_bits, const BusConfig& cfg) {
    if (static_cast<int>(bus_bits.size()) != cfg.n_buses)
        throw config_error("expected " + std::to_string(cfg.n_buses) +
                           " bus bits, got " + std::to_string(bus_bits.size()));
    if (x0 != 0 && x0 != 1) throw argument_error("logical bit must be 0 or 1");
    int value = x0;
    for (int k = 1; k <= cfg.n_buses; ++k) {
        const int bit = bus_bits[static_cast<std::size_t>(k - 1)];
        if (bit != 0 && bit != 1) throw argument_error("bus bit must be 0 or 1");
        value += bit << k;
    }
    return value;
}

int extract(int value, int k, const BusConfig& cfg) {
    if (k < 0 || k > cfg.n_buses)
        throw argument_error("digit index " + std::to_string(k) + " outside 0.." +
                             std::to_string(cfg.n_buses));
    return digit(value, k);
}

int bus_add(int value, const std::vector<int>& buses, const BusConfig& cfg) {
    check_bus_list(buses, cfg);
    int out = value;
    for (int k : buses) {
        if (digit(out, k) != 0)
            throw bus_occupied_error("bus " + std::to_string(k) + " already set in value " +
                                     std::to_string(value));
        out += 1 << k;
    }
    return out;
}

int bus_remove(int value, const std::vector<int>& buses, const BusConfig& cfg) {
    check_bus_list(buses, cfg);
    int out = value;
    for (int k : buses) {
        if (digit(out, k) != 1)
            throw bus_absent_error("bus " + std::to_string(k) + " not set in value " +
                                   std::to_string(value));
        out -= 1 << k;
    }
    return out;
}

}  // namespace qsr
