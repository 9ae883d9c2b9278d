#pragma once

#include <string>
#include <vector>

#include "qsr/errors.hpp"

namespace qsr {

/// Hardware connectivity: a chain or a row-major rectangular grid whose
/// first n cells are occupied (a partially filled last row is allowed, so
/// n = 8 fits a near-square 3x3 grid with one unused corner).
class Topology {
public:
    static Topology line(int n);
    static Topology grid(int rows, int cols);
    static Topology grid(int rows, int cols, int n);

    /// Near-square grid for n sites: cols = ceil(sqrt(n)), rows as needed.
    static Topology grid_for(int n);

    const std::string& kind() const { return kind_; }
    int n_sites() const { return static_cast<int>(neighbors_.size()); }
    bool adjacent(int a, int b) const;
    const std::vector<int>& neighbors(int v) const;  // ascending order

    /// BFS hop distances from src; unreachable sites get -1.
    std::vector<int> distances_from(int src) const;

private:
    Topology(std::string kind, std::vector<std::vector<int>> neighbors);

    std::string kind_;
    std::vector<std::vector<int>> neighbors_;
};

}  // namespace qsr
