#include "qsr/builders.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "qsr/errors.hpp"

namespace qsr {

namespace {

void check_path(const Path& path, int n_sites) {
    if (path.size() < 2) throw argument_error("path of length 0: use a local CX instead");
    std::set<int> seen;
    for (int v : path) {
        if (v < 0 || v >= n_sites) throw argument_error("path vertex outside register");
        if (!seen.insert(v).second) throw argument_error("path vertices must be distinct");
    }
}

}  // namespace

Circuit build_routed_cnot(int n_sites, int d, const Path& path, int k, int n_buses) {
    check_path(path, n_sites);
    if (n_buses < 0) n_buses = k;
    Circuit c{n_sites, BusConfig(d, n_buses), {}};
    if (k < 1 || k > n_buses) throw config_error("bus index outside configured bus count");
    const int len = static_cast<int>(path.size()) - 1;
    c.gates.reserve(static_cast<std::size_t>(2 * len + 1));
    c.gates.push_back(make_cbl(path[0], path[1], k, +1));
    for (int i = 1; i < len; ++i)
        c.gates.push_back(make_bcp(path[static_cast<std::size_t>(i)],
                                   path[static_cast<std::size_t>(i + 1)], k, +1));
    c.gates.push_back(make_cxr(path[static_cast<std::size_t>(len)], k));
    for (int i = len - 1; i >= 1; --i)
        c.gates.push_back(make_bcp(path[static_cast<std::size_t>(i)],
                                   path[static_cast<std::size_t>(i + 1)], k, -1));
    c.gates.push_back(make_cbl(path[0], path[1], k, -1));
    return c;
}

Circuit build_swap_baseline(int n_sites, int d, const Path& path) {
    check_path(path, n_sites);
    Circuit c{n_sites, BusConfig(d, 0), {}};
    const int len = static_cast<int>(path.size()) - 1;
    auto emit_swap = [&c](int a, int b) {
        c.gates.push_back(make_cx(a, b));
        c.gates.push_back(make_cx(b, a));
        c.gates.push_back(make_cx(a, b));
    };
    for (int i = 0; i + 1 < len; ++i)
        emit_swap(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i + 1)]);
    c.gates.push_back(make_cx(path[static_cast<std::size_t>(len - 1)],
                              path[static_cast<std::size_t>(len)]));
    for (int i = len - 2; i >= 0; --i)
        emit_swap(path[static_cast<std::size_t>(i)], path[static_cast<std::size_t>(i + 1)]);
    return c;
}

Circuit build_swap_baseline_native(int n_sites, int d, const Path& path) {
    check_path(path, n_sites);
    Circuit c{n_sites, BusConfig(d, 0), {}};
    const int len = static_cast<int>(path.size()) - 1;
    for (int i = 0; i + 1 < len; ++i)
        c.gates.push_back(make_swap(path[static_cast<std::size_t>(i)],
                                    path[static_cast<std::size_t>(i + 1)]));
    c.gates.push_back(make_cx(path[static_cast<std::size_t>(len - 1)],
                              path[static_cast<std::size_t>(len)]));
    for (int i = len - 2; i >= 0; --i)
        c.gates.push_back(make_swap(path[static_cast<std::size_t>(i)],
                                    path[static_cast<std::size_t>(i + 1)]));
    return c;
}

int swap_transport_cost(int path_len) {
    if (path_len < 1) throw argument_error("path length must be at least 1");
    return 3 * path_len;
}

Circuit build_routed_fanin(int n_sites, int d, const std::vector<Path>& arms,
                           const std::vector<int>& buses, std::vector<std::uint8_t> table,
                           const Unitary2& u) {
    if (arms.empty()) throw argument_error("fan-in needs at least one arm");
    if (arms.size() != buses.size())
        throw config_error("need exactly one bus per arm");
    std::set<int> distinct(buses.begin(), buses.end());
    if (distinct.size() != buses.size())
        throw config_error("arms must use pairwise distinct buses");

    const int n_buses = *std::max_element(buses.begin(), buses.end());
    Circuit c{n_sites, BusConfig(d, n_buses), {}};
    if (*std::min_element(buses.begin(), buses.end()) < 1)
        throw config_error("bus indices start at 1");
    if (static_cast<int>(table.size()) != (1 << n_buses))
        throw argument_error("truth table must have 2^K entries");
    if (!u.is_unitary()) throw argument_error("matrix is not unitary");

    const int target = arms.front().back();
    std::set<int> interior;
    for (const auto& arm : arms) {
        check_path(arm, n_sites);
        if (arm.back() != target) throw config_error("all arms must end at one target site");
        for (std::size_t i = 0; i + 1 < arm.size(); ++i)
            if (!interior.insert(arm[i]).second)
                throw config_error("arms may share only the target site");
    }

    // Emission order: arms sorted by bus index, which serializes the shared
    // last hops deterministically and yields depth 2L + 2K - 1 for equal arms.
    std::vector<std::size_t> order(arms.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&buses](std::size_t a, std::size_t b) { return buses[a] < buses[b]; });

    for (std::size_t j : order) {
        const auto& arm = arms[j];
        const int k = buses[j];
        c.gates.push_back(make_cbl(arm[0], arm[1], k, +1));
        for (std::size_t i = 1; i + 1 < arm.size(); ++i)
            c.gates.push_back(make_bcp(arm[i], arm[i + 1], k, +1));
    }
    c.gates.push_back(make_boolean_target(target, std::move(table), u));
    for (std::size_t j : order) {
        const auto& arm = arms[j];
        const int k = buses[j];
        for (std::size_t i = arm.size() - 1; i >= 2; --i)
            c.gates.push_back(make_bcp(arm[i - 1], arm[i], k, -1));
        c.gates.push_back(make_cbl(arm[0], arm[1], k, -1));
    }
    return c;
}

std::vector<std::uint8_t> table_constant(int n_buses, bool value) {
    return std::vector<std::uint8_t>(std::size_t{1} << n_buses, value ? 1 : 0);
}

namespace {

std::vector<std::uint8_t> table_from(int n_buses, std::span<const int> active,
                                     int min_active_count, bool parity_mode) {
    for (int k : active)
        if (k < 1 || k > n_buses) throw argument_error("active bus index out of range");
    std::vector<std::uint8_t> t(std::size_t{1} << n_buses, 0);
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
        int count = 0;
        for (int k : active) count += static_cast<int>(idx >> (k - 1)) & 1;
        t[idx] = parity_mode ? static_cast<std::uint8_t>(count % 2)
                             : static_cast<std::uint8_t>(count >= min_active_count);
    }
    return t;
}

}  // namespace

std::vector<std::uint8_t> table_projection(int n_buses, int k) {
    const int active[] = {k};
    return table_from(n_buses, active, 1, false);
}

std::vector<std::uint8_t> table_conjunction(int n_buses, std::span<const int> active) {
    return table_from(n_buses, active, static_cast<int>(active.size()), false);
}

std::vector<std::uint8_t> table_disjunction(int n_buses, std::span<const int> active) {
    return table_from(n_buses, active, 1, false);
}

std::vector<std::uint8_t> table_threshold(int n_buses, std::span<const int> active, int t) {
    if (t < 1 || t > static_cast<int>(active.size()))
        throw argument_error("threshold outside 1..|J|");
    return table_from(n_buses, active, t, false);
}

std::vector<std::uint8_t> table_parity(int n_buses, std::span<const int> active) {
    return table_from(n_buses, active, 0, true);
}

void apply_ideal_fanin(QuditRegister& reg, std::span<const int> controls, int target,
                       std::span<const std::uint8_t> table, const Unitary2& u) {
    if (table.size() != (std::size_t{1} << controls.size()))
        throw argument_error("truth table must have one entry per control string");
    const std::size_t st = reg.stride(target);
    auto& amp = reg.data();
    for (std::size_t i = 0; i < reg.dim(); ++i) {
        if (reg.level_at(i, target) != 0) continue;
        std::size_t idx = 0;
        for (std::size_t j = 0; j < controls.size(); ++j)
            idx |= static_cast<std::size_t>(reg.level_at(i, controls[j]) & 1) << j;
        if (!table[idx]) continue;
        const cdouble a0 = amp[i];
        const cdouble a1 = amp[i + st];
        amp[i] = u.a00 * a0 + u.a01 * a1;
        amp[i + st] = u.a10 * a0 + u.a11 * a1;
    }
}

}  // namespace qsr
