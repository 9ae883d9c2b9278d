#include "qsr/conflict_graph.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <string>

namespace qsr {

bool routes_intersect(const Route& a, const Route& b) {
    for (int v : a.vertices)
        if (std::find(b.vertices.begin(), b.vertices.end(), v) != b.vertices.end()) return true;
    return false;
}

ConflictGraph::ConflictGraph(int order) : order_(order), adj_(static_cast<std::size_t>(order), 0) {
    if (order < 0 || order > 31) throw argument_error("conflict graph order outside 0..31");
}

void ConflictGraph::add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= order_ || b >= order_ || a == b)
        throw argument_error("invalid conflict edge");
    adj_[static_cast<std::size_t>(a)] |= 1u << b;
    adj_[static_cast<std::size_t>(b)] |= 1u << a;
}

bool ConflictGraph::adjacent(int a, int b) const {
    return (adj_[static_cast<std::size_t>(a)] >> b) & 1u;
}

int ConflictGraph::degree(int v) const {
    return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int ConflictGraph::max_degree() const {
    int best = 0;
    for (int v = 0; v < order_; ++v) best = std::max(best, degree(v));
    return best;
}

ConflictGraph build_conflict_graph(const std::vector<Route>& routes) {
    ConflictGraph g(static_cast<int>(routes.size()));
    for (int j = 0; j < g.order(); ++j)
        for (int l = j + 1; l < g.order(); ++l)
            if (routes_intersect(routes[static_cast<std::size_t>(j)],
                                 routes[static_cast<std::size_t>(l)]))
                g.add_edge(j, l);
    return g;
}

namespace {

// Greedy coloring in the given vertex order; returns the color count.
int greedy_color_count(const ConflictGraph& g, const std::vector<int>& order) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    int used = 0;
    for (int v : order) {
        std::uint32_t taken = 0;
        for (int u = 0; u < g.order(); ++u)
            if (color[static_cast<std::size_t>(u)] >= 0 && g.adjacent(u, v))
                taken |= 1u << color[static_cast<std::size_t>(u)];
        int c = 0;
        while ((taken >> c) & 1u) ++c;
        color[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c + 1);
    }
    return used;
}

// Greedy clique extension from each vertex; any clique is a valid lower bound.
int greedy_clique_bound(const ConflictGraph& g) {
    int best = g.order() > 0 ? 1 : 0;
    for (int seed = 0; seed < g.order(); ++seed) {
        std::uint32_t clique = 1u << seed;
        std::uint32_t candidates = g.neighbors_mask(seed);
        int size = 1;
        while (candidates != 0) {
            const int v = std::countr_zero(candidates);
            clique |= 1u << v;
            candidates &= g.neighbors_mask(v);
            ++size;
        }
        best = std::max(best, size);
    }
    return best;
}

void chi_expand(const ConflictGraph& g, const std::vector<int>& order, std::vector<int>& color,
                std::size_t pos, int used, int lower, int& best) {
    if (used >= best) return;
    if (pos == order.size()) {
        best = used;
        return;
    }
    const int v = order[pos];
    std::uint32_t taken = 0;
    for (int u = 0; u < g.order(); ++u)
        if (color[static_cast<std::size_t>(u)] >= 0 && g.adjacent(u, v))
            taken |= 1u << color[static_cast<std::size_t>(u)];
    const int limit = std::min(used + 1, best - 1);
    for (int c = 0; c < limit; ++c) {
        if ((taken >> c) & 1u) continue;
        color[static_cast<std::size_t>(v)] = c;
        chi_expand(g, order, color, pos + 1, std::max(used, c + 1), lower, best);
        color[static_cast<std::size_t>(v)] = -1;
        if (best <= lower) return;
    }
}

// Direct backtracking K-colorability over a vertex subset (bitmask).
bool subset_k_colorable(const ConflictGraph& g, std::uint32_t subset, int k) {
    std::vector<int> vertices;
    for (int v = 0; v < g.order(); ++v)
        if ((subset >> v) & 1u) vertices.push_back(v);
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    std::function<bool(std::size_t, int)> go = [&](std::size_t pos, int used) {
        if (pos == vertices.size()) return true;
        const int v = vertices[pos];
        std::uint32_t taken = 0;
        for (int u : vertices)
            if (color[static_cast<std::size_t>(u)] >= 0 && g.adjacent(u, v))
                taken |= 1u << color[static_cast<std::size_t>(u)];
        for (int c = 0; c < std::min(used + 1, k); ++c) {
            if ((taken >> c) & 1u) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (go(pos + 1, std::max(used, c + 1))) return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return go(0, 0);
}

bool partition_search(const ConflictGraph& g, int n_buses, int n_rounds, int vertex,
                      std::vector<std::uint32_t>& parts, int parts_used,
                      std::uint64_t& budget) {
    if (budget-- == 0) throw resource_error("round partition search budget exceeded");
    if (vertex == g.order()) return true;
    const int limit = std::min(parts_used + 1, n_rounds);
    for (int p = 0; p < limit; ++p) {
        parts[static_cast<std::size_t>(p)] |= 1u << vertex;
        if (subset_k_colorable(g, parts[static_cast<std::size_t>(p)], n_buses) &&
            partition_search(g, n_buses, n_rounds, vertex + 1, parts,
                             std::max(parts_used, p + 1), budget))
            return true;
        parts[static_cast<std::size_t>(p)] &= ~(1u << vertex);
    }
    return false;
}

}  // namespace

int chromatic_number(const ConflictGraph& g) {
    if (g.order() > 24) throw resource_error("exact coloring limited to 24 routes per layer");
    if (g.order() == 0) return 0;

    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&g](int a, int b) { return g.degree(a) > g.degree(b); });

    const int lower = greedy_clique_bound(g);
    int best = greedy_color_count(g, order);
    if (best <= lower) return best;

    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    chi_expand(g, order, color, 0, 0, lower, best);
    return best;
}

int rounds_formula(int chi, int n_buses) {
    if (chi < 1) throw argument_error("chromatic number must be at least 1");
    if (n_buses < 1) throw argument_error("need at least one bus");
    return (chi + n_buses - 1) / n_buses;
}

int brute_force_min_rounds(const ConflictGraph& g, int n_buses) {
    if (n_buses < 1) throw argument_error("need at least one bus");
    if (g.order() == 0) return 0;
    for (int rounds = 1; rounds <= g.order(); ++rounds) {
        std::vector<std::uint32_t> parts(static_cast<std::size_t>(rounds), 0);
        std::uint64_t budget = 50'000'000;
        if (partition_search(g, n_buses, rounds, 0, parts, 0, budget)) return rounds;
    }
    return g.order();
}

std::uint64_t enumerate_labeled_graphs(int n,
                                       const std::function<void(const ConflictGraph&)>& f) {
    if (n < 1 || n > 5)
        throw argument_error("labeled-graph enumeration supports 1..5 vertices");
    const int n_edges = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);

    const std::uint64_t total = std::uint64_t{1} << n_edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        ConflictGraph g(n);
        for (int e = 0; e < n_edges; ++e)
            if ((mask >> e) & 1u)
                g.add_edge(edges[static_cast<std::size_t>(e)].first,
                           edges[static_cast<std::size_t>(e)].second);
        f(g);
    }
    return total;
}

GreedyAssignment greedy_bus_assignment(const std::vector<Route>& routes, int n_buses) {
    if (n_buses < 1) throw argument_error("need at least one bus");
    const int m = static_cast<int>(routes.size());
    GreedyAssignment out;
    out.bus.assign(static_cast<std::size_t>(m), 0);
    out.round.assign(static_cast<std::size_t>(m), -1);

    std::vector<int> pending(static_cast<std::size_t>(m));
    std::iota(pending.begin(), pending.end(), 0);
    int round = 0;
    while (!pending.empty()) {
        std::vector<int> deferred;
        std::vector<int> placed;
        for (int j : pending) {
            std::uint32_t taken = 0;
            for (int l : placed)
                if (routes_intersect(routes[static_cast<std::size_t>(j)],
                                     routes[static_cast<std::size_t>(l)]))
                    taken |= 1u << out.bus[static_cast<std::size_t>(l)];
            int k = 1;
            while (k <= n_buses && ((taken >> k) & 1u)) ++k;
            if (k <= n_buses) {
                out.bus[static_cast<std::size_t>(j)] = k;
                out.round[static_cast<std::size_t>(j)] = round;
                placed.push_back(j);
            } else {
                deferred.push_back(j);
            }
        }
        pending = std::move(deferred);
        ++round;
    }
    out.n_rounds = std::max(round, 1);
    return out;
}

CongestionValidation validate_congestion_theorem(int n_max, const std::vector<int>& k_list) {
    CongestionValidation result;
    result.n_max = n_max;
    result.k_list = k_list;
    const auto start = std::chrono::steady_clock::now();
    for (int n = 1; n <= n_max; ++n) {
        result.graphs_checked += enumerate_labeled_graphs(n, [&](const ConflictGraph& g) {
            const int chi = chromatic_number(g);
            for (int k : k_list)
                if (brute_force_min_rounds(g, k) != rounds_formula(chi, k))
                    ++result.discrepancies;
        });
    }
    result.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

}  // namespace qsr
