#pragma once

#include <iosfwd>
#include <map>
#include <span>

#include "qsr/conflict_graph.hpp"
#include "qsr/families.hpp"
#include "qsr/rng.hpp"
#include "qsr/topology.hpp"

namespace qsr {

/// Samples one route per gate, uniformly over all shortest paths between the
/// endpoints: path counts come from dynamic programming on the BFS distance
/// levels, then the path is drawn backward proportionally to counts.
std::vector<Route> route_layer(const LogicalLayer& layer, const Topology& topo,
                               Xoshiro256StarStar& rng);

/// Transport and congestion demand of one routed layer. Adjacent gates count
/// L = 1; per gate the SWAP baseline costs 3L and spectral routing 2L+1.
struct LayerMetrics {
    int n_routes = 0;
    int sum_len = 0;
    int swap_transport = 0;
    int routed_transport = 0;
    int chi = 0;
    std::map<int, int> rounds;  // K -> ceil(chi / K)
    std::vector<int> lengths;
};

LayerMetrics layer_metrics(const std::vector<Route>& routes, std::span<const int> k_list);

struct BenchmarkReport {
    std::string family;
    std::string topology;
    int n = 0;
    std::uint64_t seed = 0;
    std::vector<LayerMetrics> layers;

    double mean_swap() const;
    double mean_routed() const;
    double ratio() const;  // total routed / total swap
    double mean_chi() const;
    double mean_rounds(int k) const;
};

/// Routes every logical layer of one family instance on one topology.
/// Stream 0 of `seed` drives instance generation (QAOA), stream 1 drives
/// shortest-path tie sampling.
BenchmarkReport run_benchmark(const std::string& family, const std::string& topology, int n,
                              std::uint64_t seed, std::span<const int> k_list,
                              int qaoa_degree = 3);

/// Per-layer CSV rows:
/// family,topology,n,seed,layer_index,n_routes,sum_L,swap_transport,
/// routed_transport,chi,R1,R2,R3
void write_benchmark_csv(std::ostream& os, const BenchmarkReport& report);

/// Summary object mirroring the per-family benchmark table columns.
std::string benchmark_summary_json(std::span<const BenchmarkReport> reports);

}  // namespace qsr
