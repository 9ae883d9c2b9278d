#include "qsr/topology.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace qsr {

Topology::Topology(std::string kind, std::vector<std::vector<int>> neighbors)
    : kind_(std::move(kind)), neighbors_(std::move(neighbors)) {}

Topology Topology::line(int n) {
    if (n < 1) throw argument_error("line topology needs at least one site");
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (v > 0) nbrs[static_cast<std::size_t>(v)].push_back(v - 1);
        if (v + 1 < n) nbrs[static_cast<std::size_t>(v)].push_back(v + 1);
    }
    return Topology("line", std::move(nbrs));
}

Topology Topology::grid(int rows, int cols) { return grid(rows, cols, rows * cols); }

Topology Topology::grid(int rows, int cols, int n) {
    if (rows < 1 || cols < 1) throw argument_error("grid needs positive extents");
    if (n < 1 || n > rows * cols) throw argument_error("grid occupancy outside 1..rows*cols");
    std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const int r = v / cols;
        const int c = v % cols;
        auto add = [&](int rr, int cc) {
            const int u = rr * cols + cc;
            if (rr >= 0 && rr < rows && cc >= 0 && cc < cols && u < n)
                nbrs[static_cast<std::size_t>(v)].push_back(u);
        };
        add(r - 1, c);
        add(r, c - 1);
        add(r, c + 1);
        add(r + 1, c);
        std::sort(nbrs[static_cast<std::size_t>(v)].begin(),
                  nbrs[static_cast<std::size_t>(v)].end());
    }
    return Topology("grid", std::move(nbrs));
}

Topology Topology::grid_for(int n) {
    if (n < 1) throw argument_error("grid topology needs at least one site");
    const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
    const int rows = (n + cols - 1) / cols;
    return grid(rows, cols, n);
}

bool Topology::adjacent(int a, int b) const {
    const auto& nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
}

const std::vector<int>& Topology::neighbors(int v) const {
    if (v < 0 || v >= n_sites()) throw argument_error("site outside topology");
    return neighbors_[static_cast<std::size_t>(v)];
}

std::vector<int> Topology::distances_from(int src) const {
    if (src < 0 || src >= n_sites()) throw argument_error("site outside topology");
    std::vector<int> dist(static_cast<std::size_t>(n_sites()), -1);
    std::deque<int> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        for (int u : neighbors(v))
            if (dist[static_cast<std::size_t>(u)] < 0) {
                dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(u);
            }
    }
    return dist;
}

}  // namespace qsr
