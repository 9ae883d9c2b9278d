#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace qsr {

using cdouble = std::complex<double>;

/// Dense state vector over d^n basis states.
///
/// Basis convention: site 0 is most significant, so a product state with
/// per-site levels v_i sits at index sum_i v_i * d^(n-1-i). Serialized
/// dumps use the same ordering.
class QuditRegister {
public:
    QuditRegister(int n_sites, int d);  // |0...0>

    static QuditRegister basis(int n_sites, int d, std::span<const int> levels);

    int n_sites() const { return n_sites_; }
    int d() const { return d_; }
    std::size_t dim() const { return amp_.size(); }

    cdouble& amp(std::size_t i) { return amp_[i]; }
    const cdouble& amp(std::size_t i) const { return amp_[i]; }
    std::vector<cdouble>& data() { return amp_; }
    const std::vector<cdouble>& data() const { return amp_; }

    /// d^(n-1-site): index step between consecutive levels of `site`.
    std::size_t stride(int site) const;

    int level_at(std::size_t index, int site) const;
    std::size_t index_of(std::span<const int> levels) const;

    double norm_sq() const;
    void normalize();

private:
    int n_sites_;
    int d_;
    std::vector<cdouble> amp_;
};

/// |<a|b>|^2; registers must have identical shape.
double fidelity(const QuditRegister& a, const QuditRegister& b);

/// Marginal level distribution of one site.
std::vector<double> site_distribution(const QuditRegister& reg, int site);

/// Probability of finding the site outside the computational pair {0,1}.
double routing_population(const QuditRegister& reg, int site);

/// JSON dump: header (n_sites, d, ordering) plus [re, im] pairs in basis order.
void write_state_json(std::ostream& os, const QuditRegister& reg);

}  // namespace qsr
