#include "qsr/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "qsr/rng.hpp"

namespace qsr {

LogicalCircuit gen_qft(int n) {
    if (n < 2) throw argument_error("qft needs at least two qubits");
    LogicalCircuit c{"qft", n, {}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) c.gates.emplace_back(i, j);
    return c;
}

LogicalCircuit gen_mirror(int n) {
    if (n < 2 || n % 2 != 0) throw argument_error("mirror needs an even qubit count");
    LogicalCircuit c{"mirror", n, {}};
    for (int i = 0; i < n / 2; ++i) c.gates.emplace_back(i, n - 1 - i);
    return c;
}

LogicalCircuit gen_qaoa(int n, int degree, std::uint64_t seed) {
    if (n < 2) throw argument_error("qaoa needs at least two qubits");
    if (degree < 1 || degree >= n) throw argument_error("regular degree outside 1..n-1");
    if ((n * degree) % 2 != 0) throw argument_error("n*degree must be even");

    auto rng = Xoshiro256StarStar::stream(seed, 0);
    std::vector<int> stubs(static_cast<std::size_t>(n * degree));
    for (int v = 0; v < n; ++v)
        std::fill_n(stubs.begin() + static_cast<std::ptrdiff_t>(v) * degree, degree, v);

    LogicalCircuit c{"qaoa", n, {}};
    for (int attempt = 0; attempt < 10'000; ++attempt) {
        // Fisher-Yates shuffle, then pair consecutive stubs.
        std::vector<int> s = stubs;
        for (std::size_t i = s.size() - 1; i > 0; --i)
            std::swap(s[i], s[rng.below(i + 1)]);

        std::set<std::pair<int, int>> edges;
        bool ok = true;
        for (std::size_t i = 0; i < s.size(); i += 2) {
            const int a = std::min(s[i], s[i + 1]);
            const int b = std::max(s[i], s[i + 1]);
            if (a == b || !edges.emplace(a, b).second) {
                ok = false;
                break;
            }
        }
        if (ok) {
            c.gates.assign(edges.begin(), edges.end());
            return c;
        }
    }
    throw resource_error("could not sample a simple regular graph; degree too tight");
}

namespace {

using PairList = std::vector<std::pair<int, int>>;

void append(PairList& out, const PairList& part) {
    out.insert(out.end(), part.begin(), part.end());
}

PairList toffoli_pairs(int c0, int c1, int target) {
    return {{c1, target}, {c0, c1}, {c1, target}, {c0, c1}, {c0, target}};
}

// Multi-controlled X lowered through idle register qubits. With at least
// m-2 idle qubits the dirty-qubit V-chain applies; with fewer, the gate
// splits through one idle qubit into two halves (larger half first). Idle
// qubits are borrowed nearest the last control first, ties to the lower
// index. Deterministic by construction.
PairList mcx_pairs(const std::vector<int>& controls, int target, std::vector<int> idle) {
    const int m = static_cast<int>(controls.size());
    PairList pairs;
    if (m == 0) return pairs;
    if (m == 1) return {{controls[0], target}};
    if (m == 2) return toffoli_pairs(controls[0], controls[1], target);

    const int anchor = controls.back();
    std::sort(idle.begin(), idle.end(), [anchor](int a, int b) {
        const int da = std::abs(a - anchor), db = std::abs(b - anchor);
        return da != db ? da < db : a < b;
    });

    if (static_cast<int>(idle.size()) >= m - 2) {
        const auto& c = controls;
        const std::vector<int> b(idle.begin(), idle.begin() + (m - 2));
        PairList half = toffoli_pairs(c[static_cast<std::size_t>(m - 1)],
                                      b[static_cast<std::size_t>(m - 3)], target);
        PairList chain;
        for (int i = m - 2; i > 1; --i)
            append(chain, toffoli_pairs(c[static_cast<std::size_t>(i)],
                                        b[static_cast<std::size_t>(i - 2)],
                                        b[static_cast<std::size_t>(i - 1)]));
        append(half, chain);
        append(half, toffoli_pairs(c[1], c[0], b[0]));
        half.insert(half.end(), chain.rbegin(), chain.rend());
        append(pairs, half);
        append(pairs, half);
        return pairs;
    }

    const int relay = idle.front();
    const int m1 = (m + 1) / 2;
    const std::vector<int> head(controls.begin(), controls.begin() + m1);
    std::vector<int> tail(controls.begin() + m1, controls.end());
    std::vector<int> head_idle = tail;
    head_idle.push_back(target);
    const auto sub_head = mcx_pairs(head, relay, head_idle);
    tail.push_back(relay);
    const auto sub_tail = mcx_pairs(tail, target, head);
    append(pairs, sub_head);
    append(pairs, sub_tail);
    append(pairs, sub_head);
    append(pairs, sub_tail);
    return pairs;
}

// Multi-controlled rotation: peel the last control as CV / MCX / CV+ / MCX /
// MC-sqrt-V; peeled controls join the idle pool of the deeper levels.
PairList mc_rotation_pairs(const std::vector<int>& controls, int target,
                           const std::vector<int>& idle) {
    const int m = static_cast<int>(controls.size());
    PairList pairs;
    if (m == 0) return pairs;
    if (m == 1) return {{controls[0], target}};
    std::vector<int> rest(controls.begin(), controls.end() - 1);
    const int pivot = controls.back();

    std::vector<int> x_idle = idle;
    x_idle.push_back(target);
    const auto block_x = mcx_pairs(rest, pivot, x_idle);

    std::vector<int> deeper_idle = idle;
    deeper_idle.push_back(pivot);
    const auto inner = mc_rotation_pairs(rest, target, deeper_idle);

    pairs.emplace_back(pivot, target);
    append(pairs, block_x);
    pairs.emplace_back(pivot, target);
    append(pairs, block_x);
    append(pairs, inner);
    return pairs;
}

}  // namespace

std::vector<std::pair<int, int>> multi_controlled_pairs(const std::vector<int>& controls,
                                                        int target) {
    return mc_rotation_pairs(controls, target, {});
}

LogicalCircuit gen_amplitude(int n, std::uint64_t marked) {
    if (n < 3) throw argument_error("amplitude amplification needs at least three qubits");
    if (n < 64 && marked != ~std::uint64_t{0} && marked >= (std::uint64_t{1} << n))
        throw argument_error("marked state outside the register");
    std::vector<int> controls(static_cast<std::size_t>(n - 1));
    std::iota(controls.begin(), controls.end(), 0);
    const auto mcz = multi_controlled_pairs(controls, n - 1);

    LogicalCircuit c{"amplitude", n, {}};
    c.gates.reserve(2 * mcz.size());
    c.gates.insert(c.gates.end(), mcz.begin(), mcz.end());  // oracle block
    c.gates.insert(c.gates.end(), mcz.begin(), mcz.end());  // diffusion block
    return c;
}

std::vector<LogicalLayer> layerize(const LogicalCircuit& circuit) {
    std::vector<LogicalLayer> layers;
    std::vector<int> last(static_cast<std::size_t>(circuit.n), -1);
    for (const auto& [a, b] : circuit.gates) {
        if (a < 0 || b < 0 || a >= circuit.n || b >= circuit.n || a == b)
            throw argument_error("logical gate references invalid qubits");
        const int moment = std::max(last[static_cast<std::size_t>(a)],
                                    last[static_cast<std::size_t>(b)]) +
                           1;
        if (moment == static_cast<int>(layers.size())) layers.emplace_back();
        layers[static_cast<std::size_t>(moment)].emplace_back(a, b);
        last[static_cast<std::size_t>(a)] = moment;
        last[static_cast<std::size_t>(b)] = moment;
    }
    return layers;
}

}  // namespace qsr
