#include "qsr/route_bench.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include <nlohmann/json.hpp>

namespace qsr {

namespace {

Route sample_shortest_path(const Topology& topo, int src, int dst, Xoshiro256StarStar& rng) {
    const auto dist = topo.distances_from(src);
    if (dist[static_cast<std::size_t>(dst)] < 0)
        throw argument_error("route endpoints are disconnected");

    // Shortest-path counts on the BFS level structure.
    std::vector<std::uint64_t> count(dist.size(), 0);
    count[static_cast<std::size_t>(src)] = 1;
    std::vector<int> order(dist.size());
    for (std::size_t v = 0; v < dist.size(); ++v) order[v] = static_cast<int>(v);
    std::sort(order.begin(), order.end(), [&dist](int a, int b) {
        return dist[static_cast<std::size_t>(a)] < dist[static_cast<std::size_t>(b)];
    });
    for (int v : order) {
        if (dist[static_cast<std::size_t>(v)] <= 0) continue;
        for (int u : topo.neighbors(v))
            if (dist[static_cast<std::size_t>(u)] == dist[static_cast<std::size_t>(v)] - 1)
                count[static_cast<std::size_t>(v)] += count[static_cast<std::size_t>(u)];
    }

    // Walk back from dst, picking predecessors proportionally to counts.
    Route route;
    route.vertices.assign(1, dst);
    int v = dst;
    while (v != src) {
        std::uint64_t total = 0;
        for (int u : topo.neighbors(v))
            if (dist[static_cast<std::size_t>(u)] == dist[static_cast<std::size_t>(v)] - 1)
                total += count[static_cast<std::size_t>(u)];
        std::uint64_t pick = rng.below(total);
        int chosen = -1;
        for (int u : topo.neighbors(v)) {
            if (dist[static_cast<std::size_t>(u)] != dist[static_cast<std::size_t>(v)] - 1)
                continue;
            if (pick < count[static_cast<std::size_t>(u)]) {
                chosen = u;
                break;
            }
            pick -= count[static_cast<std::size_t>(u)];
        }
        route.vertices.push_back(chosen);
        v = chosen;
    }
    std::reverse(route.vertices.begin(), route.vertices.end());
    return route;
}

Topology make_topology(const std::string& topology, int n) {
    if (topology == "line") return Topology::line(n);
    if (topology == "grid") return Topology::grid_for(n);
    throw argument_error("unknown topology '" + topology + "' (expected line or grid)");
}

LogicalCircuit make_family(const std::string& family, int n, std::uint64_t seed,
                           int qaoa_degree) {
    if (family == "qft") return gen_qft(n);
    if (family == "mirror") return gen_mirror(n);
    if (family == "qaoa") return gen_qaoa(n, qaoa_degree, seed);
    if (family == "amplitude") return gen_amplitude(n);
    throw argument_error("unknown family '" + family +
                         "' (expected qft, qaoa, amplitude or mirror)");
}

}  // namespace

std::vector<Route> route_layer(const LogicalLayer& layer, const Topology& topo,
                               Xoshiro256StarStar& rng) {
    std::vector<Route> routes;
    routes.reserve(layer.size());
    for (const auto& [a, b] : layer) routes.push_back(sample_shortest_path(topo, a, b, rng));
    return routes;
}

LayerMetrics layer_metrics(const std::vector<Route>& routes, std::span<const int> k_list) {
    LayerMetrics m;
    m.n_routes = static_cast<int>(routes.size());
    for (const auto& r : routes) {
        m.lengths.push_back(r.length());
        m.sum_len += r.length();
        m.swap_transport += 3 * r.length();
        m.routed_transport += 2 * r.length() + 1;
    }
    if (routes.empty()) {
        for (int k : k_list) m.rounds[k] = 0;
        return m;
    }
    const auto graph = build_conflict_graph(routes);
    m.chi = chromatic_number(graph);
    for (int k : k_list) m.rounds[k] = rounds_formula(m.chi, k);
    return m;
}

double BenchmarkReport::mean_swap() const {
    double total = 0.0;
    for (const auto& l : layers) total += l.swap_transport;
    return layers.empty() ? 0.0 : total / static_cast<double>(layers.size());
}

double BenchmarkReport::mean_routed() const {
    double total = 0.0;
    for (const auto& l : layers) total += l.routed_transport;
    return layers.empty() ? 0.0 : total / static_cast<double>(layers.size());
}

double BenchmarkReport::ratio() const {
    double swap = 0.0, routed = 0.0;
    for (const auto& l : layers) {
        swap += l.swap_transport;
        routed += l.routed_transport;
    }
    return swap == 0.0 ? 0.0 : routed / swap;
}

double BenchmarkReport::mean_chi() const {
    double total = 0.0;
    for (const auto& l : layers) total += l.chi;
    return layers.empty() ? 0.0 : total / static_cast<double>(layers.size());
}

double BenchmarkReport::mean_rounds(int k) const {
    double total = 0.0;
    for (const auto& l : layers) {
        const auto it = l.rounds.find(k);
        if (it == l.rounds.end()) throw argument_error("K missing from layer metrics");
        total += it->second;
    }
    return layers.empty() ? 0.0 : total / static_cast<double>(layers.size());
}

BenchmarkReport run_benchmark(const std::string& family, const std::string& topology, int n,
                              std::uint64_t seed, std::span<const int> k_list,
                              int qaoa_degree) {
    const auto topo = make_topology(topology, n);
    const auto circuit = make_family(family, n, seed, qaoa_degree);
    auto rng = Xoshiro256StarStar::stream(seed, 1);

    BenchmarkReport report;
    report.family = family;
    report.topology = topology;
    report.n = n;
    report.seed = seed;
    for (const auto& layer : layerize(circuit)) {
        const auto routes = route_layer(layer, topo, rng);
        auto metrics = layer_metrics(routes, k_list);
        // Exact-coloring sanity: clique bound <= chi <= maxdeg + 1.
        const auto graph = build_conflict_graph(routes);
        if (metrics.n_routes > 0 && metrics.chi > graph.max_degree() + 1)
            throw resource_error("coloring bound violated; coloring is buggy");
        report.layers.push_back(std::move(metrics));
    }
    return report;
}

void write_benchmark_csv(std::ostream& os, const BenchmarkReport& report) {
    os << "family,topology,n,seed,layer_index,n_routes,sum_L,swap_transport,"
          "routed_transport,chi,R1,R2,R3\n";
    for (std::size_t i = 0; i < report.layers.size(); ++i) {
        const auto& l = report.layers[i];
        auto round_of = [&l](int k) {
            const auto it = l.rounds.find(k);
            return it == l.rounds.end() ? 0 : it->second;
        };
        os << report.family << ',' << report.topology << ',' << report.n << ',' << report.seed
           << ',' << i << ',' << l.n_routes << ',' << l.sum_len << ',' << l.swap_transport
           << ',' << l.routed_transport << ',' << l.chi << ',' << round_of(1) << ','
           << round_of(2) << ',' << round_of(3) << '\n';
    }
}

std::string benchmark_summary_json(std::span<const BenchmarkReport> reports) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json row;
        row["family"] = r.family;
        row["topology"] = r.topology;
        row["n"] = r.n;
        row["seed"] = r.seed;
        row["n_layers"] = r.layers.size();
        row["mean_swap_transport"] = r.mean_swap();
        row["mean_routed_transport"] = r.mean_routed();
        row["ratio"] = r.ratio();
        row["mean_chi"] = r.mean_chi();
        nlohmann::ordered_json rounds;
        if (!r.layers.empty())
            for (const auto& [k, unused] : r.layers.front().rounds)
                rounds["R" + std::to_string(k)] = r.mean_rounds(k);
        row["mean_rounds"] = std::move(rounds);
        rows.push_back(std::move(row));
    }
    return rows.dump(2);
}

}  // namespace qsr
