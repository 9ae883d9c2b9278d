#include "qsr/register.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "qsr/errors.hpp"
#include "qsr/version.hpp"

#include <nlohmann/json.hpp>

namespace qsr {

namespace {

std::size_t checked_dim(int n_sites, int d) {
    if (n_sites < 1) throw argument_error("register needs at least one site");
    if (d < 2) throw argument_error("local dimension must be at least 2");
    std::size_t dim = 1;
    for (int i = 0; i < n_sites; ++i) {
        if (dim > (std::size_t{1} << 40) / static_cast<std::size_t>(d))
            throw resource_error("state vector of " + std::to_string(n_sites) + " sites at d=" +
                                 std::to_string(d) + " exceeds the dense-simulation bound");
        dim *= static_cast<std::size_t>(d);
    }
    return dim;
}

}  // namespace

QuditRegister::QuditRegister(int n_sites, int d)
    : n_sites_(n_sites), d_(d), amp_(checked_dim(n_sites, d)) {
    amp_[0] = 1.0;
}

QuditRegister QuditRegister::basis(int n_sites, int d, std::span<const int> levels) {
    QuditRegister reg(n_sites, d);
    reg.amp_[0] = 0.0;
    reg.amp_[reg.index_of(levels)] = 1.0;
    return reg;
}

std::size_t QuditRegister::stride(int site) const {
    std::size_t s = 1;
    for (int i = n_sites_ - 1; i > site; --i) s *= static_cast<std::size_t>(d_);
    return s;
}

int QuditRegister::level_at(std::size_t index, int site) const {
    return static_cast<int>(index / stride(site) % static_cast<std::size_t>(d_));
}

std::size_t QuditRegister::index_of(std::span<const int> levels) const {
    if (static_cast<int>(levels.size()) != n_sites_)
        throw argument_error("expected " + std::to_string(n_sites_) + " levels, got " +
                             std::to_string(levels.size()));
    std::size_t index = 0;
    for (int site = 0; site < n_sites_; ++site) {
        const int v = levels[static_cast<std::size_t>(site)];
        if (v < 0 || v >= d_)
            throw argument_error("level " + std::to_string(v) + " outside 0.." +
                                 std::to_string(d_ - 1));
        index = index * static_cast<std::size_t>(d_) + static_cast<std::size_t>(v);
    }
    return index;
}

double QuditRegister::norm_sq() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return s;
}

void QuditRegister::normalize() {
    const double n = std::sqrt(norm_sq());
    if (n == 0.0) throw argument_error("cannot normalize the zero vector");
    for (auto& a : amp_) a /= n;
}

double fidelity(const QuditRegister& a, const QuditRegister& b) {
    if (a.n_sites() != b.n_sites() || a.d() != b.d())
        throw argument_error("fidelity requires registers of identical shape");
    cdouble overlap = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) overlap += std::conj(a.amp(i)) * b.amp(i);
    return std::norm(overlap);
}

std::vector<double> site_distribution(const QuditRegister& reg, int site) {
    if (site < 0 || site >= reg.n_sites()) throw argument_error("site index out of range");
    std::vector<double> p(static_cast<std::size_t>(reg.d()), 0.0);
    const std::size_t st = reg.stride(site);
    const std::size_t d = static_cast<std::size_t>(reg.d());
    for (std::size_t i = 0; i < reg.dim(); ++i)
        p[i / st % d] += std::norm(reg.amp(i));
    return p;
}

double routing_population(const QuditRegister& reg, int site) {
    const auto p = site_distribution(reg, site);
    double pop = 0.0;
    for (std::size_t l = 2; l < p.size(); ++l) pop += p[l];
    return pop;
}

void write_state_json(std::ostream& os, const QuditRegister& reg) {
    nlohmann::ordered_json j;
    j["header"] = {{"version", kVersion},
                   {"n_sites", reg.n_sites()},
                   {"d", reg.d()},
                   {"ordering", "site0-most-significant"}};
    auto& amps = j["amplitudes"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < reg.dim(); ++i)
        amps.push_back({reg.amp(i).real(), reg.amp(i).imag()});
    os << j.dump(2) << '\n';
}

}  // namespace qsr
