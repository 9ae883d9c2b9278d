#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qsr/errors.hpp"

namespace qsr {

/// One routed operation's path through the topology.
struct Route {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

bool routes_intersect(const Route& a, const Route& b);

/// Intersection graph of a layer's routes: an edge joins two routes whose
/// vertex sets overlap, i.e. the pairs that cannot share a bus in one round.
class ConflictGraph {
public:
    explicit ConflictGraph(int order);

    int order() const { return order_; }
    void add_edge(int a, int b);
    bool adjacent(int a, int b) const;
    int degree(int v) const;
    int max_degree() const;
    std::uint32_t neighbors_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }

private:
    int order_;
    std::vector<std::uint32_t> adj_;
};

ConflictGraph build_conflict_graph(const std::vector<Route>& routes);

/// Exact chromatic number by branch and bound with a greedy-clique lower
/// bound and a greedy upper bound. Refuses orders above 24.
int chromatic_number(const ConflictGraph& g);

/// Minimum logical routing rounds with K buses: ceil(chi / K).
int rounds_formula(int chi, int n_buses);

/// Independent exact validator: smallest R such that the vertices split into
/// R parts whose induced subgraphs are each K-colorable, found by exhaustive
/// part assignment. Uses a plain backtracking colorability check, sharing no
/// code with chromatic_number.
int brute_force_min_rounds(const ConflictGraph& g, int n_buses);

/// Streams all 2^(n(n-1)/2) labeled graphs on n vertices in lexicographic
/// edge-mask order (edges ordered (0,1),(0,2),...,(n-2,n-1)); returns the
/// count. n above 5 is refused.
std::uint64_t enumerate_labeled_graphs(int n, const std::function<void(const ConflictGraph&)>& f);

struct GreedyAssignment {
    std::vector<int> bus;    // 1-based bus per route
    std::vector<int> round;  // 0-based round per route
    int n_rounds = 0;
};

/// Each route takes the smallest bus not used by an intersecting route
/// already placed in the same round; routes with no free bus defer to the
/// next round, in original index order.
GreedyAssignment greedy_bus_assignment(const std::vector<Route>& routes, int n_buses);

struct CongestionValidation {
    int n_max = 0;
    std::vector<int> k_list;
    std::uint64_t graphs_checked = 0;
    std::uint64_t discrepancies = 0;
    double elapsed_seconds = 0.0;
};

/// Compares brute_force_min_rounds against rounds_formula on every labeled
/// graph up to n_max vertices for each K in k_list.
CongestionValidation validate_congestion_theorem(int n_max, const std::vector<int>& k_list);

}  // namespace qsr
